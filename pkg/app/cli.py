"""
Interfaz de línea de comandos.

Subcomandos:
    intersect-sim | multidim-sim | bernoulli-empty      experimentos de subconjuntos
    group sweep | group trivialize | group check        presentaciones aleatorias
    thresholds | moments | words count|enumerate|sample consultas deterministas

Cada experimento acepta ``--config archivo.json`` y flags que lo sobrescriben.
Código de salida 0 al completar, 2 ante un error de configuración o de dominio.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from itertools import islice
from pathlib import Path
from typing import Any, Optional, Sequence

from domain.errors import ConfigError, DomainError
from domain.experiments.config import ExperimentConfig
from domain.groups.models import Letter, Word
from domain.groups.smallcancel import find_trivializing_pair, max_piece_ratio, satisfies_c_prime, thresholds
from domain.groups.words import (
    count_cyclically_reduced, count_true_powers, enumerate_cyclically_reduced, iter_distinct_relators,
)
from domain.models import SeedSpec
from domain.moments import bound_evaluators, intersection_moments_uniform
from domain.pipeline import run_experiment
from domain.summary import summary_to_frame
from infrastructure.exporters import write_outputs
from infrastructure.loaders import config_from_dict, get_presentation, read_json
from settings import settings

log = logging.getLogger("cli")

# flag → campo de ExperimentConfig
OVERRIDES = {
    "n": "n", "alpha": "alpha", "beta": "beta", "d": "d", "extra_densities": "extra_densities",
    "lam": "lambda", "ell": "ell", "m": "m", "k": "k", "trials": "trials", "seed": "master_seed",
    "epsilon": "epsilon", "model": "model", "relators": "relators",
    "pass_high": "pass_high", "pass_low": "pass_low",
}


def _print_json(data: Any) -> None:
    print(json.dumps(data, indent=2, ensure_ascii=False))


def _add_common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--config", type=Path, help="Configuración JSON; los flags la sobrescriben")
    p.add_argument("--trials", type=int)
    p.add_argument("--seed", type=int, help=f"Semilla maestra (por defecto {settings.MASTER_SEED})")
    p.add_argument("--out", type=Path, help="Directorio de salida (por defecto OUTPUT_DIR/<kind>)")
    p.add_argument("--pass-high", type=float, dest="pass_high")
    p.add_argument("--pass-low", type=float, dest="pass_low")


def _add_subset_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--n", type=int, nargs="+")
    p.add_argument("--d", type=float, nargs="+")
    p.add_argument("--epsilon", type=float)
    p.add_argument("--model", choices=["uniform", "bernoulli", "mixture", "function_image"])


def _add_group_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--m", type=int, nargs="+")
    p.add_argument("--ell", type=int, nargs="+")
    p.add_argument("--d", type=float, nargs="+")
    p.add_argument("--relators", type=int, help="Cantidad fija de relatores por ensayo")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="densidad", description="Subconjuntos aleatorios con densidad y grupos aleatorios.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("intersect-sim", help="Fórmula de intersección (Monte Carlo)")
    _add_common(p)
    _add_subset_flags(p)
    p.add_argument("--alpha", type=float, nargs="+")
    p.add_argument("--beta", type=float, nargs="+")
    p.add_argument("--extra-densities", type=float, nargs="+", dest="extra_densities")
    p.set_defaults(handler=cmd_experiment, kind="intersection")

    p = sub.add_parser("multidim-sim", help="Fórmula multidimensional (Monte Carlo)")
    _add_common(p)
    _add_subset_flags(p)
    p.add_argument("--alpha", type=float, nargs="+", help="Densidades de X para la familia random")
    p.add_argument("--k", type=int)
    p.add_argument("--tuple-set", dest="tuple_set",
                   help="Familia (full | star | random) o ruta a un JSON de conjunto de tuplas")
    p.set_defaults(handler=cmd_experiment, kind="multidim")

    p = sub.add_parser("bernoulli-empty", help="Fracción de muestras de Bernoulli vacías")
    _add_common(p)
    _add_subset_flags(p)
    p.set_defaults(handler=cmd_experiment, kind="bernoulli_empty")

    group = sub.add_parser("group", help="Presentaciones aleatorias")
    gsub = group.add_subparsers(dest="group_command", required=True)
    p = gsub.add_parser("sweep", help="Barrido de C'(λ)")
    _add_common(p)
    _add_group_flags(p)
    p.add_argument("--lambda", type=float, nargs="+", dest="lam")
    p.set_defaults(handler=cmd_experiment, kind="group_cprime_sweep")
    p = gsub.add_parser("trivialize", help="Barrido de testigos de trivialización")
    _add_common(p)
    _add_group_flags(p)
    p.set_defaults(handler=cmd_experiment, kind="trivialization_sweep")
    p = gsub.add_parser("check", help="C'(λ) y piezas de una presentación")
    p.add_argument("--presentation", type=Path, required=True)
    p.add_argument("--lambda", type=float, required=True, dest="lam")
    p.set_defaults(handler=cmd_group_check)

    p = sub.add_parser("thresholds", help="Umbrales explícitos de densidad")
    p.add_argument("--m", type=int, nargs="+", default=[2])
    p.add_argument("--epsilon", type=float, default=0.0)
    p.set_defaults(handler=cmd_thresholds)

    p = sub.add_parser("moments", help="Fórmulas exactas y cotas como JSON")
    p.add_argument("--n", type=int, required=True)
    for name in ("alpha", "beta", "d", "epsilon", "c"):
        p.add_argument(f"--{name}", type=float)
    p.add_argument("--r", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("--ka", type=int, help="Cardinal de A (momentos exactos de |A∩B|)")
    p.add_argument("--kb", type=int, help="Cardinal de B")
    p.add_argument("--exact", action="store_true", help="Aritmética racional (n ≤ ORACLE_MAX_N)")
    p.set_defaults(handler=cmd_moments)

    words = sub.add_parser("words", help="Palabras cíclicamente reducidas")
    wsub = words.add_subparsers(dest="words_command", required=True)
    p = wsub.add_parser("count")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--ell", type=int, required=True)
    p.set_defaults(handler=cmd_words_count)
    p = wsub.add_parser("enumerate")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--limit", type=int, default=100)
    p.set_defaults(handler=cmd_words_enumerate)
    p = wsub.add_parser("sample")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--ell", type=int, required=True)
    p.add_argument("--count", type=int, default=10)
    p.add_argument("--seed", type=int, default=None)
    p.set_defaults(handler=cmd_words_sample)
    return parser


# ------------------------------------------------------------------
# Experimentos
# ------------------------------------------------------------------

def _tuple_set_description(value: str) -> dict[str, Any]:
    if value in ("full", "star", "random"):
        return {"family": value}
    path = Path(value)
    if path.exists():
        return read_json(path)
    raise ConfigError(f"--tuple-set: familia o archivo desconocido {value!r}")


def config_from_args(args: argparse.Namespace) -> ExperimentConfig:
    """Configuración del archivo (si hay) con los flags dados encima."""
    data: dict[str, Any] = {}
    if getattr(args, "config", None) is not None:
        data = read_json(args.config)
        if not isinstance(data, dict):
            raise ConfigError(f"Se esperaba un objeto JSON en {args.config}")
        if data.get("kind", args.kind) != args.kind:
            raise ConfigError(f"La configuración es de tipo {data['kind']}, el subcomando espera {args.kind}")
    data["kind"] = args.kind
    for attr, field in OVERRIDES.items():
        value = getattr(args, attr, None)
        if value is not None:
            data.pop("lam" if field == "lambda" else field, None)
            data[field] = value
    if getattr(args, "tuple_set", None) is not None:
        data["tuple_set"] = _tuple_set_description(args.tuple_set)
    return config_from_dict(data)


def cmd_experiment(args: argparse.Namespace) -> int:
    cfg = config_from_args(args)
    summary = run_experiment(cfg)
    out_dir = args.out if args.out is not None else settings.OUTPUT_DIR / cfg.kind
    paths = write_outputs(summary, out_dir)
    print(summary_to_frame(summary).to_string(index=False))
    print(f"\nResultados: {paths['results']}")
    return 0


# ------------------------------------------------------------------
# Consultas
# ------------------------------------------------------------------

def cmd_group_check(args: argparse.Namespace) -> int:
    relators = get_presentation(args.presentation)
    pieces = max_piece_ratio(relators)
    report = {
        "m": relators.m,
        "relators": len(relators.relators),
        "lambda": args.lam,
        "c_prime": satisfies_c_prime(relators, args.lam).model_dump(),
        "c_prime_cross_only": satisfies_c_prime(relators, args.lam, cross_only=True).model_dump(),
        "pieces": pieces.model_dump(),
        "trivializing_pairs": {},
    }
    for g in range(1, relators.m + 1):
        x = Letter(generator=g)
        w = find_trivializing_pair(relators, x)
        report["trivializing_pairs"][str(x)] = None if w is None else str(w)
    _print_json(report)
    return 0


def cmd_thresholds(args: argparse.Namespace) -> int:
    _print_json([thresholds(m, args.epsilon).model_dump() for m in args.m])
    return 0


def cmd_moments(args: argparse.Namespace) -> int:
    out = bound_evaluators(args.n, alpha=args.alpha, beta=args.beta, d=args.d, epsilon=args.epsilon,
                           r=args.r, k=args.k, c=args.c)
    if args.ka is not None and args.kb is not None:
        out["intersection_moments"] = intersection_moments_uniform(args.n, args.ka, args.kb, exact=args.exact).model_dump()
    _print_json(out)
    return 0


def cmd_words_count(args: argparse.Namespace) -> int:
    table = count_cyclically_reduced(args.m, args.ell)
    rows = [
        {"t": t, "S_t": s, "B_t": b, "true_powers": count_true_powers(args.m, t)}
        for t, (s, b) in enumerate(zip(table.counts_exact, table.cumulative), start=1)
    ]
    # enteros grandes como texto para no perder precisión en JSON
    _print_json({"m": args.m, "ell": args.ell, "sandwich_holds": table.sandwich_holds(),
                 "rows": [{k: str(v) if k != "t" else v for k, v in row.items()} for row in rows]})
    return 0


def cmd_words_enumerate(args: argparse.Namespace) -> int:
    for word in islice(enumerate_cyclically_reduced(args.m, args.t), args.limit):
        print(word)
    return 0


def cmd_words_sample(args: argparse.Namespace) -> int:
    seed = SeedSpec(master_seed=args.seed if args.seed is not None else settings.MASTER_SEED)
    for data in iter_distinct_relators(args.m, args.ell, args.count, seed):
        print(Word.from_bytes(data, args.m))
    return 0


def main(argv: Optional[Sequence[str]] = None) -> int:
    settings.configure_logging()
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.handler(args)
    except (ConfigError, DomainError) as e:
        log.error("%s", e)
        return 2


if __name__ == "__main__":
    sys.exit(main())
