"""
Script para validar la aritmética de umbrales y los conteos de palabras.
Imprime una tabla por rango m con ✅/❌ en cada desigualdad requerida.
"""
import sys
from pathlib import Path

# Agregar el directorio raíz al path para importar los módulos
sys.path.append(str(Path(__file__).parent.parent))

from domain.groups.smallcancel import thresholds
from domain.groups.words import count_cyclically_reduced


def _mark(ok: bool) -> str:
    return "✅" if ok else "❌"


def validate_thresholds(ranks=range(2, 11), epsilon: float = 0.0) -> bool:
    """
    Verifica para cada m que λ supere su cota inferior, que d_AO quede por
    debajo de λ/2 y de la brecha 1 − dens_M.
    """
    all_ok = True
    print("\n=== Umbrales explícitos ===")
    for m in ranks:
        t = thresholds(m, epsilon)
        ok = t.lambda_above_floor and t.ao_below_half_lambda and t.ao_below_readable_gap
        all_ok &= ok
        print(f"{_mark(ok)} m={m:2d}  μ={t.mu:.6f}  λ={t.lam:.4e}  piso={t.lam_floor:.4e}  "
              f"d_AO={t.d_ao:.4e}  dens_M={t.dens_m:.6f}")
    return all_ok


def validate_word_counts(ranks=range(2, 11), ell: int = 40) -> bool:
    """Verifica (2m−1)^t ≤ |S_t| ≤ 2m(2m−1)^(t−1) para t ≤ ell."""
    all_ok = True
    print("\n=== Conteo de palabras cíclicamente reducidas ===")
    for m in ranks:
        table = count_cyclically_reduced(m, ell)
        ok = table.sandwich_holds()
        all_ok &= ok
        print(f"{_mark(ok)} m={m:2d}  |B_{ell}| = {table.total:.3e}")
    return all_ok


if __name__ == "__main__":
    ok = validate_thresholds() & validate_word_counts()
    sys.exit(0 if ok else 1)
