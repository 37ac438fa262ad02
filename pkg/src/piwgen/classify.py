"""Exact classification of generator output.

Collapses a list of PIW matrices into Hadamard classes by canonical
form, merges transpose-equivalent classes, decomposes each class into
indecomposable diagonal blocks, and labels the block structure against
recursively built catalogs of primitive classes of smaller order.

Imprimitivity is decided by connectivity of the bipartite support
graph (rows ∪ columns, an edge wherever an entry is nonzero): monomial
operations only relabel that graph, and a matrix is equivalent to a
block sum exactly when the graph is disconnected.
"""

from __future__ import annotations

import string
from dataclasses import dataclass
from functools import lru_cache

from . import canon
from .core import Matrix, transpose
from .search import rep_piw


@dataclass(frozen=True)
class HClass:
    representative: Matrix     # the minimal member of the class
    members: int               # raw inputs collapsed into it


@dataclass(frozen=True)
class THClass:
    representative: Matrix     # min(Min(M), Min(Mᵀ))
    self_transpose: bool       # Min(M) == Min(Mᵀ)
    h_classes: tuple[HClass, ...]

    @property
    def members(self) -> int:
        return sum(h.members for h in self.h_classes)


@dataclass(frozen=True)
class BlockDecomposition:
    blocks: tuple[Matrix, ...]  # canonical forms, ascending (size, row-lex)
    primitive: bool


@dataclass(frozen=True)
class StructureLabel:
    # one term per distinct block class: (order, letter, catalog index, count)
    terms: tuple[tuple[int, str, int, int], ...]
    label: str        # e.g. "3A⊕C2"; index shown when the catalog has >1 entry
    type_label: str   # indices dropped, e.g. "3A⊕C"

    @property
    def block_orders(self) -> tuple[int, ...]:
        out = []
        for order, _, _, count in self.terms:
            out.extend([order] * count)
        return tuple(sorted(out, reverse=True))


def dedup_h_classes(mats: list[Matrix]) -> list[HClass]:
    """One class per distinct canonical form, ascending."""
    if not mats:
        return []
    shapes = {(len(m), len(m[0])) for m in mats}
    if len(shapes) > 1:
        raise ValueError(f"mixed dimensions: {sorted(shapes)}")
    counts: dict[Matrix, int] = {}
    for mat in mats:
        rep = canon.canonical_form(mat)
        counts[rep] = counts.get(rep, 0) + 1
    return [HClass(rep, counts[rep]) for rep in sorted(counts)]


def th_canonical(mat: Matrix) -> tuple[Matrix, bool]:
    """Transpose-Hadamard canonical form and self-transposedness."""
    if len(mat) != len(mat[0]):
        raise ValueError("transpose equivalence needs square matrices")
    a = canon.canonical_form(mat)
    b = canon.canonical_form(transpose(a))
    return min(a, b), a == b


def dedup_th_classes(h_classes: list[HClass]) -> list[THClass]:
    """Merge H-classes whose transposes are Hadamard-equivalent."""
    groups: dict[Matrix, list[HClass]] = {}
    selfs: dict[Matrix, bool] = {}
    for h in h_classes:
        rep, self_t = th_canonical(h.representative)
        groups.setdefault(rep, []).append(h)
        selfs[rep] = self_t
    return [
        THClass(rep, selfs[rep], tuple(sorted(groups[rep], key=lambda h: h.representative)))
        for rep in sorted(groups)
    ]


def decompose(mat: Matrix) -> BlockDecomposition:
    """Connected components of the support graph, as canonical blocks."""
    m, n = len(mat), len(mat[0])
    for i, row in enumerate(mat):
        if not any(row):
            raise ValueError(f"zero row {i + 1}: not a positive-weight PIW")
    for j in range(n):
        if not any(mat[i][j] for i in range(m)):
            raise ValueError(f"zero column {j + 1}: not a positive-weight PIW")
    # union-find over row vertices 0..m-1 and column vertices m..m+n-1
    parent = list(range(m + n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(x: int, y: int) -> None:
        rx, ry = find(x), find(y)
        if rx != ry:
            parent[rx] = ry

    for i in range(m):
        for j in range(n):
            if mat[i][j]:
                union(i, m + j)

    comps: dict[int, tuple[list[int], list[int]]] = {}
    for i in range(m):
        comps.setdefault(find(i), ([], []))[0].append(i)
    for j in range(n):
        comps.setdefault(find(m + j), ([], []))[1].append(j)

    blocks = []
    for rows, cols in comps.values():
        sub = tuple(tuple(mat[i][j] for j in cols) for i in rows)
        blocks.append(canon.canonical_form(sub))
    blocks.sort(key=lambda b: (len(b), b))
    return BlockDecomposition(tuple(blocks), primitive=len(blocks) == 1)


def block_sum(blocks: list[Matrix]) -> Matrix:
    """Block-diagonal composition of the given matrices."""
    total_n = sum(len(b[0]) for b in blocks)
    rows = []
    offset = 0
    for b in blocks:
        width = len(b[0])
        for row in b:
            rows.append((0,) * offset + row + (0,) * (total_n - offset - width))
        offset += width
    return tuple(rows)


@lru_cache(maxsize=None)
def primitive_catalog(order: int, k: int) -> tuple[Matrix, ...]:
    """Primitive TH-class representatives of IW(order, k), sorted.

    Built by running the full generation and classification at the
    smaller order; cached per (order, k).
    """
    mats = rep_piw(order, order, k)
    th = dedup_th_classes(dedup_h_classes(mats))
    return tuple(
        t.representative for t in th if decompose(t.representative).primitive
    )


def _letters(orders: list[int]) -> dict[int, str]:
    """A, B, C, ... assigned to orders with primitive classes, ascending."""
    names = {}
    for rank, order in enumerate(sorted(orders)):
        q, r = divmod(rank, 26)
        names[order] = string.ascii_uppercase[r] * (q + 1)
    return names


def structure_label(
    dec: BlockDecomposition,
    catalogs: dict[int, tuple[Matrix, ...]],
    letters: dict[int, str],
) -> StructureLabel:
    """Express a decomposition against the catalogs, e.g. ``3A⊕C1``."""
    counts: dict[tuple[int, int], int] = {}
    for block in dec.blocks:
        order = len(block)
        rep, _ = th_canonical(block)
        catalog = catalogs.get(order, ())
        if rep not in catalog:
            raise ValueError(
                f"block of order {order} not found in catalog "
                f"({len(catalog)} entries): incomplete catalog?"
            )
        idx = catalog.index(rep)
        counts[(order, idx)] = counts.get((order, idx), 0) + 1
    terms = tuple(
        (order, letters[order], idx, counts[(order, idx)])
        for order, idx in sorted(counts)
    )
    full_parts = []
    type_parts = []
    for order, letter, idx, count in terms:
        stem = f"{letter}{idx + 1}" if len(catalogs[order]) > 1 else letter
        full_parts.append(f"{count}{stem}" if count > 1 else stem)
        type_parts.append(f"{count}{letter}" if count > 1 else letter)
    return StructureLabel(terms, "⊕".join(full_parts), "⊕".join(type_parts))


def paper_display(mat: Matrix) -> Matrix:
    """Positive-leading display form: negate rows, then columns."""
    rows = []
    for row in mat:
        lead = next((e for e in row if e), 0)
        rows.append(tuple(-e for e in row) if lead < 0 else row)
    cols = []
    for col in zip(*rows):
        lead = next((e for e in col if e), 0)
        cols.append(tuple(-e for e in col) if lead < 0 else col)
    return tuple(zip(*cols))


@dataclass(frozen=True)
class ClassReport:
    index: int
    representative: Matrix
    members: int
    invariant_digest: str
    self_transpose: bool | None = None
    primitive: bool | None = None
    label: str | None = None
    type_label: str | None = None
    block_orders: tuple[int, ...] | None = None


@dataclass(frozen=True)
class ClassificationReport:
    m: int
    n: int
    k: int
    generated: int
    invariant_depth: int
    bound: int
    invariant_groups: int | None
    h_classes: tuple[HClass, ...]
    th_classes: tuple[THClass, ...] | None
    classes: tuple[ClassReport, ...]
    table: tuple[tuple[str, int], ...] | None
    primitive_count: int | None


def build_report(
    m: int,
    n: int,
    k: int,
    h_classes: list[HClass],
    *,
    generated: int,
    invariant_depth: int,
    bound: int,
    invariant_groups: int | None = None,
    th_classes: list[THClass] | None = None,
    with_structure: bool = True,
) -> ClassificationReport:
    """Assemble the machine-readable classification report.

    For square inputs with TH classes the report carries per-class
    primitivity, block-structure labels and the multiplicity table
    aggregated by label type (unless with_structure is off); otherwise
    it stops at H-classes.
    """
    from .invariant import code_invariant

    classes: list[ClassReport] = []
    table = None
    primitive_count = None

    if th_classes is not None and th_classes and not with_structure:
        for i, t in enumerate(th_classes):
            classes.append(
                ClassReport(
                    index=i,
                    representative=t.representative,
                    members=t.members,
                    invariant_digest=code_invariant(
                        t.representative, invariant_depth, bound
                    ).digest(),
                    self_transpose=t.self_transpose,
                )
            )
    elif th_classes is not None and th_classes:
        decs = [decompose(t.representative) for t in th_classes]
        catalogs: dict[int, tuple[Matrix, ...]] = {
            order: primitive_catalog(order, k) for order in range(1, n)
        }
        catalogs[n] = tuple(
            t.representative for t, d in zip(th_classes, decs) if d.primitive
        )
        letters = _letters([o for o, cat in catalogs.items() if cat])
        primitive_count = 0
        type_counts: dict[tuple[tuple[int, ...], str], int] = {}
        for i, (t, dec) in enumerate(zip(th_classes, decs)):
            if dec.primitive:
                primitive_count += 1
            structure = structure_label(dec, catalogs, letters)
            key = (structure.block_orders, structure.type_label)
            type_counts[key] = type_counts.get(key, 0) + 1
            classes.append(
                ClassReport(
                    index=i,
                    representative=t.representative,
                    members=t.members,
                    invariant_digest=code_invariant(
                        t.representative, invariant_depth, bound
                    ).digest(),
                    self_transpose=t.self_transpose,
                    primitive=dec.primitive,
                    label=structure.label,
                    type_label=structure.type_label,
                    block_orders=structure.block_orders,
                )
            )
        table = tuple(
            (type_label, type_counts[(orders, type_label)])
            for orders, type_label in sorted(type_counts)
        )
    else:
        for i, h in enumerate(h_classes):
            classes.append(
                ClassReport(
                    index=i,
                    representative=h.representative,
                    members=h.members,
                    invariant_digest=code_invariant(
                        h.representative, min(invariant_depth, m), bound
                    ).digest(),
                )
            )

    return ClassificationReport(
        m=m,
        n=n,
        k=k,
        generated=generated,
        invariant_depth=invariant_depth,
        bound=bound,
        invariant_groups=invariant_groups,
        h_classes=tuple(h_classes),
        th_classes=tuple(th_classes) if th_classes is not None else None,
        classes=tuple(classes),
        table=table,
        primitive_count=primitive_count,
    )
