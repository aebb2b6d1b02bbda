"""Exact combinatorics of affine Weyl groups, canonical bases, antispherical
right cells, tilting characters and nilpotent-orbit support predictions."""

from .affine import (
    AffineElement,
    AffineWeyl,
    Alcove,
    SimpleReflectionSet,
    UnsupportedRegimeError,
)
from .cells import (
    CellEdge,
    CellPartition,
    GenerationConstants,
    cell_edges,
    cell_generators,
    decompose_fW,
    generation_constants,
    leq_R,
    right_cells,
    stabilization_n,
)
from .hecke import (
    AsphElt,
    AsphModule,
    BasisTableError,
    CanonicalBasisTable,
    Hecke,
    HeckeElt,
    TableBasisProvider,
    ZeroBasisProvider,
    load_basis_table,
    specialize_v1,
    table_from_zero_basis,
)
from .laurent import LaurentPoly
from .orbits import (
    NilpotentOrbit,
    OrbitTable,
    PredictionRecord,
    UnsupportedTypeError,
    build_orbit_table,
    cell_to_orbit,
    closure_order,
    enumerate_orbits,
    humphreys_predict,
)
from .rootdata import CartanType, FiniteWeylElement, RootDatum, build_root_datum
from .tilting import (
    GroupAlgebraElt,
    MZeroElt,
    c_of_module,
    fusion_multiplicity,
    in_fundamental_alcove,
    leq_T,
    summand_multiplicity,
    tensor_translate,
    tilting_class,
    tilting_class_from_json,
    tilting_class_json,
    wall_crossing,
    weyl_module_character,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
