"""Exact computations for round twin groups and the spaces Q_n, M_n."""

from .complex import (
    Cell,
    CellParseError,
    CubicalComplex,
    DomainError,
    Kind,
    SpaceSpec,
    VertexLink,
    build_complex,
    cell_count_oracle,
    cofaces,
    enumerate_cells,
    euler_characteristic,
    faces,
    format_cell,
    is_flag,
    parse_cell,
    vertex_link,
)
from .homology import HomologyGroup, SmithForm, boundary_matrix, homology, smith_normal_form

__version__ = "0.1.0"
