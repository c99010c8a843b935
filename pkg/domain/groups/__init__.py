from domain.groups.models import Letter, RelatorSet, Word, WordCountTable
from domain.groups.smallcancel import (
    PieceIndex, find_trivializing_pair, max_piece_ratio, piece_phase_densities, satisfies_c_prime,
    symmetrize, thresholds,
)
from domain.groups.words import (
    count_cyclically_reduced, count_true_powers, cyclic_reduce, enumerate_cyclically_reduced,
    free_reduce, is_true_power, iter_distinct_relators, iter_uniform_words, sample_cyclically_reduced,
)
