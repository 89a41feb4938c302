"""Canonical subspaces of an algebra and closure/natural-basis checks.

A subspace is represented by the reduced row echelon form of any spanning
set, with zero rows dropped.  That form is unique per row space, so two
subspaces are equal exactly when their basis matrices are entry-wise
equal, and deduplication needs no extra work.
"""

from __future__ import annotations

from typing import Iterable

from .algebra import Element, EvolutionAlgebra
from .errors import MixedAlgebras, MixedFieldSpecs, NotASubalgebra, NotRegular
from .linalg import Matrix, rref


class Subspace:
    """A linear subspace in canonical RREF-basis form.

    The constructor canonicalizes whatever spanning rows it is given;
    ``Subspace.span`` is the usual entry point from elements.
    """

    __slots__ = ("algebra", "basis", "pivot_cols")

    def __init__(self, algebra: EvolutionAlgebra, spanning: Matrix):
        if spanning.spec != algebra.spec:
            raise MixedFieldSpecs("spanning matrix over a different field")
        if spanning.ncols != algebra.dim:
            raise ValueError(
                f"spanning rows have width {spanning.ncols}, algebra dimension is {algebra.dim}"
            )
        res = rref(spanning)
        self.algebra = algebra
        self.basis = Matrix(algebra.spec, res.rref.rows()[: res.rank], ncols=algebra.dim)
        self.pivot_cols = res.pivot_cols

    @classmethod
    def span(cls, algebra: EvolutionAlgebra, elements: Iterable[Element]) -> "Subspace":
        """Canonical subspace spanned by the given elements."""
        rows = []
        for e in elements:
            if e.algebra != algebra:
                raise MixedAlgebras("spanning element from a different algebra")
            rows.append(e.coords)
        return cls(algebra, Matrix(algebra.spec, rows, ncols=algebra.dim))

    @property
    def dim(self) -> int:
        return self.basis.nrows

    def basis_elements(self) -> tuple[Element, ...]:
        return tuple(Element(self.algebra, row) for row in self.basis.rows())

    def contains(self, u: Element) -> bool:
        """Membership by reduction against the RREF basis."""
        if u.algebra != self.algebra:
            raise MixedAlgebras("element from a different algebra")
        v = list(u.coords)
        for row, c in zip(self.basis.rows(), self.pivot_cols):
            f = v[c]
            if f.value == 0:
                continue
            v = [a - f * b for a, b in zip(v, row)]
            v[c] = self.algebra.spec.zero()
        return all(x.is_zero() for x in v)

    def is_subalgebra(self) -> bool:
        """Closure under the product; basis pairs suffice by bilinearity."""
        basis = self.basis_elements()
        for i, u in enumerate(basis):
            for w in basis[i:]:
                if not self.contains(u * w):
                    return False
        return True

    def natural_basis(self) -> list[Element]:
        """The canonical basis, which is natural when the ambient algebra
        is regular: pairwise products vanish and supports are disjoint.

        Raises NotRegular for singular ambient algebras (no guarantee
        exists there, even though such bases occasionally do) and
        NotASubalgebra when the subspace is not closed.
        """
        if not self.algebra.is_regular():
            raise NotRegular("ambient algebra is not regular")
        if not self.is_subalgebra():
            raise NotASubalgebra("subspace is not closed under the product")
        basis = list(self.basis_elements())
        for i, u in enumerate(basis):
            for w in basis[i + 1 :]:
                if not (u * w).is_zero():
                    raise AssertionError("natural-basis guarantee violated: nonzero cross product")
                if set(u.support()) & set(w.support()):
                    raise AssertionError("natural-basis guarantee violated: overlapping supports")
        return basis

    def sort_key(self):
        return (
            self.basis.nrows,
            self.pivot_cols,
            tuple(x.sort_key() for row in self.basis.rows() for x in row),
        )

    def __eq__(self, other):
        if not isinstance(other, Subspace):
            return NotImplemented
        return self.algebra == other.algebra and self.basis == other.basis

    def __hash__(self):
        return hash((self.algebra, self.basis))

    def render(self) -> str:
        return "span{" + ", ".join(e.render() for e in self.basis_elements()) + "}"

    def __repr__(self):
        return f"Subspace({self.render()}, dim={self.dim})"
