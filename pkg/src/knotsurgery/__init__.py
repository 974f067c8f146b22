"""knotsurgery: exact diagram calculus for annulus-twisted knot families.

Submodules
----------
laurent    exact integer Laurent polynomials and the symmetric normal form
diagram    link diagrams: crossings, twist boxes, surgery coefficients
moves      Reidemeister rewriting and greedy simplification
alexander  Wirtinger presentations and the Fox-calculus Alexander polynomial
snf        Smith normal form and finitely generated abelian groups
kirby      framed-link calculus: blow-ups/downs, slides, chain certification
annulus    annulus presentations, arc models, the twist operations
family     generators for the two knot families and distinctness reports
cli        batch command-line front end
"""

from .laurent import LaurentPoly, NotNormalizable, SymmetricAlexander, normalize_symmetric
from .diagram import (Crossing, Diagram, DiagramBuilder, SurgeryCoefficient,
                      TwistBox)

__all__ = [
    "LaurentPoly", "NotNormalizable", "SymmetricAlexander",
    "normalize_symmetric", "Crossing", "Diagram", "DiagramBuilder",
    "SurgeryCoefficient", "TwistBox",
]

__version__ = "0.1.0"
