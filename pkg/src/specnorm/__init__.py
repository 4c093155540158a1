"""Dense tensor spectral norms, rank-one approximation, orthogonal tensors."""

from .backend import BACKEND
from .core import (
    DenseTensor,
    FactorTuple,
    fiber,
    frobenius_inner,
    frobenius_norm,
    load_tensor,
    make_tensor,
    matricize,
    mode_contract,
    multiform_apply,
    permute_modes,
    rank_one,
    save_tensor,
    tensor_from_dict,
    tensor_slice,
    tensor_to_dict,
)
from .experiments import (
    CSV_COLUMNS,
    EXPERIMENT_NAMES,
    ExperimentRecord,
    records_to_csv,
    records_to_dicts,
    run_experiment,
    run_fooling,
    run_known4,
    run_orthogonal,
    run_random,
)
from .hurwitz import (
    ADMISSIBLE,
    BRACKET,
    EXACT,
    LOWER_BOUND_ONLY,
    NOT_ADMISSIBLE,
    UNKNOWN,
    Admissibility,
    AppRatio,
    app_ratio,
    catalog_tables,
    hurwitz_radon,
    is_admissible,
    l_star_m,
    naive_lower_bound,
    yiu_upper,
)
from .linalg import (
    DEFAULT_SEED,
    Seed,
    complete_basis,
    gaussian_array,
    gaussian_tensor,
    random_orthogonal,
    random_unit_vector,
    svd,
    top_singular_triplet,
    uniform_array,
)
from .orthogonal import (
    Algebra,
    OrthogonalityReport,
    check_orthogonal,
    fooling_tensor,
    known4_tensor,
    lift_orthogonal,
    mult_table,
    mult_tensor,
    subtensor,
    tall_orthogonal,
)
from .rankone import (
    NormBracket,
    OptimOptions,
    RankOneResult,
    approximation_error,
    asvd,
    best_rank_one,
    fiber_decomposition,
    fiber_init,
    hopm,
    hosvd_init,
    nuclear_norm_bounds,
    ones_init,
    random_init,
    spectral_norm_bounds,
    spectral_normal_form,
    normal_form_residual,
)

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "__version__",
    "DenseTensor",
    "FactorTuple",
    "fiber",
    "frobenius_inner",
    "frobenius_norm",
    "load_tensor",
    "make_tensor",
    "matricize",
    "mode_contract",
    "multiform_apply",
    "permute_modes",
    "rank_one",
    "save_tensor",
    "tensor_from_dict",
    "tensor_slice",
    "tensor_to_dict",
    "CSV_COLUMNS",
    "EXPERIMENT_NAMES",
    "ExperimentRecord",
    "records_to_csv",
    "records_to_dicts",
    "run_experiment",
    "run_fooling",
    "run_known4",
    "run_orthogonal",
    "run_random",
    "ADMISSIBLE",
    "BRACKET",
    "EXACT",
    "LOWER_BOUND_ONLY",
    "NOT_ADMISSIBLE",
    "UNKNOWN",
    "Admissibility",
    "AppRatio",
    "app_ratio",
    "catalog_tables",
    "hurwitz_radon",
    "is_admissible",
    "l_star_m",
    "naive_lower_bound",
    "yiu_upper",
    "DEFAULT_SEED",
    "Seed",
    "complete_basis",
    "gaussian_array",
    "gaussian_tensor",
    "random_orthogonal",
    "random_unit_vector",
    "svd",
    "top_singular_triplet",
    "uniform_array",
    "Algebra",
    "OrthogonalityReport",
    "check_orthogonal",
    "fooling_tensor",
    "known4_tensor",
    "lift_orthogonal",
    "mult_table",
    "mult_tensor",
    "subtensor",
    "tall_orthogonal",
    "NormBracket",
    "OptimOptions",
    "RankOneResult",
    "approximation_error",
    "asvd",
    "best_rank_one",
    "fiber_decomposition",
    "fiber_init",
    "hopm",
    "hosvd_init",
    "nuclear_norm_bounds",
    "ones_init",
    "random_init",
    "spectral_norm_bounds",
    "spectral_normal_form",
    "normal_form_residual",
]
