from ._core import (
    CharMatrix,
    ConsistencyError,
    NotCharacteristic,
    NotFactorCompatible,
    blockize,
    enumerate_charmaps,
    factor_compatible,
    genus,
    hodge,
    mod2_betti,
    orientable,
    recover_T,
    rz_poincare,
    small_cover_betti,
    sq1_e2_betti,
    symplectic_verdict,
)

__all__ = [
    "CharMatrix",
    "ConsistencyError",
    "NotCharacteristic",
    "NotFactorCompatible",
    "blockize",
    "enumerate_charmaps",
    "factor_compatible",
    "genus",
    "hodge",
    "mod2_betti",
    "orientable",
    "recover_T",
    "rz_poincare",
    "small_cover_betti",
    "sq1_e2_betti",
    "symplectic_verdict",
]
