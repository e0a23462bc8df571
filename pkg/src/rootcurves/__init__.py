"""Positive real roots of the affine quiver A~(n-1,1) as curves.

Each positive real root has a canonical curve in a punctured plane and a
curve on an annulus.  Intersection numbers of these curves match the
dimensions of Ext groups between the corresponding string modules.
"""
from .annulus import (
    AnnulusCurve,
    Unsupported,
    build_gamma,
    dimension_vector,
    int_annulus,
    self_int_annulus,
)
from .ext_oracle import (
    QuiverRep,
    StringWord,
    euler_form,
    ext_dim_cluster,
    ext_dim_kq,
    hom_dim,
    rep_from_string,
    string_word,
)
from .geom_oracle import (
    BACKEND,
    AnnulusLayout,
    DegeneracyError,
    Layout,
    LayoutError,
    Polyline,
    count_crossings,
    count_self,
    realize_annulus,
    realize_plane,
    realize_plane_pair,
)
from .root_system import (
    ReflectionWord,
    Root,
    SchurLeft,
    SchurRight,
    Type1,
    Type2,
    apply_word,
    classify,
    enumerate_positive_real,
    plateau,
    simple_reflect,
    simple_root,
)
from .word_builder import (
    PlaneCurve,
    R,
    S,
    build_F,
    build_schur,
    build_type1,
    build_type2,
    spiral_decompose,
)

__version__ = "0.1.0"
