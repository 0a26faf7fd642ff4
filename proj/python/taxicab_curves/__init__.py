"""Taxicab conics, multi-focal ellipses and their measures."""

from ._core import (
    BracketExceeded,
    Circle,
    EmptyRegion,
    InvalidArgument,
    Line,
    NoMeasure,
    Parabola,
    Point,
    SumEllipse,
    TaxicabError,
    TwoFociEllipse,
    TwoFociHyperbola,
    UnsupportedMetric,
    classify_ellipse,
    classify_hyperbola,
    classify_parabola,
    contour,
    fermat_point,
    measures_oracle,
    minkowski_distance,
    closed_form_measures,
    point_line_distance,
    reconcile,
    render_svg,
    residual,
    run_cli,
    scan,
    sum_ellipse_polygon,
    taxicab_distance,
)

CANONICAL_TRIFOCAL_FOCI = ((-1.0, 0.0), (1.0, 0.0), (0.0, 0.0))

__all__ = [name for name in dir() if not name.startswith("_")]
