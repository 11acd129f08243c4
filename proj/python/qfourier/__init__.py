"""2-box Fourier analysis on finite group models.

Thin re-export of the compiled extension; see the C++ headers for the
operation semantics.
"""

from _qfourier import (  # noqa: F401
    BiprojectionError,
    BlockmapError,
    Group,
    GroupError,
    IsingError,
    ShadingError,
    SpectralError,
    TwoBox,
    adjoint,
    b_lambda,
    basis_box,
    box,
    classify_beta,
    contragredient,
    coproduct,
    critical_beta,
    distance2,
    entropy,
    enumerate_biprojections,
    group,
    hausdorff_young_check,
    holder_check,
    identity_box,
    indicator_box,
    inverse_sumset_certify,
    is_biprojection,
    is_bishift,
    is_positive,
    is_projection,
    iterate_blockmap,
    jones_projection,
    make_bishift_abelian,
    multiply,
    norm2,
    pnorm,
    random_box,
    sft,
    sft_inverse,
    subgroup_biprojection,
    subgroups,
    sumset_bounds,
    support_size,
    t_step,
    to_matrix,
    trace,
    young_check,
    zero_box,
)

__all__ = [name for name in dir() if not name.startswith("_")]
