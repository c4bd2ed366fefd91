"""Enumeration of unicyclic graphs and extremal skew-energy search.

Only the two canonical orientations of each unicyclic graph are scored:
every orientation is switching-equivalent to one of them, and switching
does not change the spectrum.
"""

from __future__ import annotations

import heapq
import itertools
from dataclasses import dataclass, field
from typing import Iterator, Optional

from .charpoly import SkewCoeffs, coeffs_exact
from .energy import EQUAL, GREATER, LESS, energy_spectral, quasi_compare
from .graph import Graph, girth, is_unicyclic, make_family, unique_cycle
from .orient import MINUS, PLUS, orient_unicyclic

TIE_TOL = 1e-9
MAX_ENUM_N = 12
MAX_SEARCH_N = 10


# -- canonical forms -------------------------------------------------------


def _tree_code(G, v, parent, blocked):
    kids = sorted(_tree_code(G, w, v, blocked) for w in G.adjacency[v] if w != parent and w not in blocked)
    return "(" + "".join(kids) + ")"


def unicyclic_key(G: Graph) -> bytes:
    """Isomorphism certificate for a unicyclic graph.

    Each cycle vertex carries the canonical code of the tree hanging from it;
    the key is the least rotation or reflection of that sequence of codes.
    """
    cycle = unique_cycle(G)
    on_cycle = set(cycle)
    codes = [_tree_code(G, v, -1, on_cycle) for v in cycle]
    rev = codes[::-1]
    size = len(codes)
    best = min(
        tuple(seq[i:] + seq[:i]) for seq in (codes, rev) for i in range(size)
    )
    return f"U{size}:{''.join(best)}".encode()


def _refine(G, cells):
    while True:
        where = {v: i for i, cell in enumerate(cells) for v in cell}
        out = []
        for cell in cells:
            if len(cell) == 1:
                out.append(cell)
                continue
            sig = {}
            for v in cell:
                counts = [0] * len(cells)
                for w in G.adjacency[v]:
                    counts[where[w]] += 1
                sig.setdefault(tuple(counts), []).append(v)
            out.extend(sig[s] for s in sorted(sig))
        if len(out) == len(cells):
            return out
        cells = out


def certificate(G: Graph) -> bytes:
    """Isomorphism certificate for any small graph.

    Individualisation-refinement without automorphism pruning: every choice
    in the first smallest non-trivial cell is explored and the least relabelled
    edge list wins. Exponential for highly symmetric graphs.
    """
    best = None
    by_degree = {}
    for v in range(G.n):
        by_degree.setdefault(G.degree(v), []).append(v)
    start = [by_degree[d] for d in sorted(by_degree)]

    def search(cells):
        nonlocal best
        cells = _refine(G, cells)
        if all(len(c) == 1 for c in cells):
            perm = {c[0]: i for i, c in enumerate(cells)}
            form = G.relabel(perm).edges
            if best is None or form < best:
                best = form
            return
        target = min((i for i, c in enumerate(cells) if len(c) > 1), key=lambda i: len(cells[i]))
        for v in cells[target]:
            rest = [w for w in cells[target] if w != v]
            search(cells[:target] + [[v], rest] + cells[target + 1 :])

    search(start)
    return f"G{G.n}:{best}".encode()


def canonical_key(G: Graph) -> bytes:
    return unicyclic_key(G) if is_unicyclic(G) else certificate(G)


# -- enumeration -----------------------------------------------------------


def prufer_tree(seq, n: int) -> list:
    """Edges of the labelled tree with Prufer sequence ``seq``."""
    degree = [1] * n
    for v in seq:
        degree[v] += 1
    leaves = [v for v in range(n) if degree[v] == 1]
    heapq.heapify(leaves)
    edges = []
    for v in seq:
        leaf = heapq.heappop(leaves)
        edges.append((leaf, v))
        degree[v] -= 1
        if degree[v] == 1:
            heapq.heappush(leaves, v)
    edges.append((heapq.heappop(leaves), heapq.heappop(leaves)))
    return edges


def _tree_path(adj, a, b):
    parent = {a: None}
    stack = [a]
    while stack:
        u = stack.pop()
        for w in adj[u]:
            if w not in parent:
                parent[w] = u
                stack.append(w)
    path = []
    while b != a:
        path.append((min(b, parent[b]), max(b, parent[b])))
        b = parent[b]
    return path


def _labelled_unicyclic(n):
    # each labelled graph arises from l trees (drop any cycle edge); keep the
    # one whose added edge is the largest on the cycle
    for seq in itertools.product(range(n), repeat=n - 2):
        tree = prufer_tree(seq, n)
        adj = [[] for _ in range(n)]
        for u, v in tree:
            adj[u].append(v)
            adj[v].append(u)
        present = {(min(u, v), max(u, v)) for u, v in tree}
        for a, b in itertools.combinations(range(n), 2):
            if (a, b) in present:
                continue
            if all(e < (a, b) for e in _tree_path(adj, a, b)):
                yield Graph(n, tuple(tree) + ((a, b),))


def _unlabelled_unicyclic(n):
    # every unicyclic graph that is not a cycle has a pendant vertex whose
    # removal leaves a unicyclic graph, so growing cycles by pendants reaches all
    for length in range(3, n + 1):
        level = {unicyclic_key(make_family("cycle", length)): make_family("cycle", length)}
        for size in range(length, n):
            grown = {}
            for key in sorted(level):
                G = level[key]
                for v in range(size):
                    H = Graph(size + 1, G.edges + ((v, size),))
                    grown.setdefault(unicyclic_key(H), H)
            level = grown
        for key in sorted(level):
            yield level[key]


def enumerate_unicyclic(n: int, dedupe: bool = True) -> Iterator[Graph]:
    """Connected graphs with ``n`` vertices and ``n`` edges.

    With ``dedupe`` one representative per isomorphism class is produced,
    ordered by girth and then by canonical key. Without it every labelled
    graph is produced from a Prufer-indexed tree plus one extra edge.
    """
    if not 3 <= n <= MAX_ENUM_N:
        raise ValueError(f"enumeration supports 3 <= n <= {MAX_ENUM_N}, got {n}")
    return _unlabelled_unicyclic(n) if dedupe else _labelled_unicyclic(n)


# -- scoring ---------------------------------------------------------------


@dataclass(frozen=True)
class SearchRecord:
    graph: Graph
    sign: str
    coeffs: SkewCoeffs
    energy: float
    canonical_key: bytes
    girth: int
    rank: int = 0
    label: str = field(default="", compare=False)


def family_label(G: Graph, key: Optional[bytes] = None) -> str:
    """Name of the family member isomorphic to ``G``; other graphs get ``U_n^l{tree codes}``."""
    key = key or unicyclic_key(G)
    n, length = G.n, girth(G)
    if length == n:
        return f"C_{n}"
    for kind, letter in (("snl", "S"), ("pnl", "P")):
        if unicyclic_key(make_family(kind, n, length)) == key:
            return f"{letter}_{n}^{length}"
    return f"U_{n}^{length}" + "{" + key.decode().split(":", 1)[1] + "}"


def _record(G, sign, key, label):
    og = orient_unicyclic(G, sign)
    length = girth(G)
    suffix = "" if length % 2 else ("+" if sign == PLUS else "-")
    return SearchRecord(G, sign, coeffs_exact(og), energy_spectral(og), key, length, label=label + suffix)


def score_unicyclic(n: int, dedupe: bool = True) -> list:
    """Records for both canonical orientations (plus only for odd girth), by energy."""
    records = []
    for G in enumerate_unicyclic(n, dedupe):
        key = unicyclic_key(G)
        label = family_label(G, key)
        signs = (PLUS,) if girth(G) % 2 else (PLUS, MINUS)
        records.extend(_record(G, s, key, label) for s in signs)
    records.sort(key=lambda r: (r.energy, r.canonical_key, r.sign))
    return records


def group_ties(records, tol: float = TIE_TOL) -> list:
    groups = []
    for r in records:
        if groups and abs(r.energy - groups[-1][0].energy) <= tol:
            groups[-1].append(r)
        else:
            groups.append([r])
    return groups


def _ranked(records, objective, top):
    ordered = records if objective == "min" else sorted(records, key=lambda r: (-r.energy, r.canonical_key, r.sign))
    out = []
    for rank, group in enumerate(group_ties(ordered)[:top]):
        group = sorted(group, key=lambda r: (r.canonical_key, r.sign))
        out.extend(SearchRecord(r.graph, r.sign, r.coeffs, r.energy, r.canonical_key, r.girth, rank, r.label) for r in group)
    return out


def search_extremal(n: int, objective: str = "min", top: int = 1, dedupe: bool = True) -> list:
    """Records from the ``top`` best energy levels; tied records share a rank."""
    if not 3 <= n <= MAX_SEARCH_N:
        raise ValueError(f"search supports 3 <= n <= {MAX_SEARCH_N}, got {n}")
    if objective not in ("min", "max"):
        raise ValueError(f"objective must be 'min' or 'max', got {objective!r}")
    if top < 1:
        raise ValueError(f"top must be positive, got {top}")
    return _ranked(score_unicyclic(n, dedupe), objective, top)


# -- verification ----------------------------------------------------------


@dataclass(frozen=True)
class Claim:
    name: str
    expected: str
    observed: str
    passed: bool


@dataclass
class VerificationReport:
    n: int
    claims: list = field(default_factory=list)

    @property
    def all_passed(self) -> bool:
        return all(c.passed for c in self.claims)

    def add(self, name, expected, observed, passed):
        self.claims.append(Claim(name, str(expected), str(observed), bool(passed)))


def verify_claims(n: int) -> VerificationReport:
    """Check the extremal statements for unicyclic orientations on ``n`` vertices."""
    if not 4 <= n <= 9:
        raise ValueError(f"verification supports 4 <= n <= 9, got {n}")
    records = score_unicyclic(n)
    report = VerificationReport(n)

    def member(kind, length, sign=PLUS):
        G = make_family(kind, n, length)
        if length % 2:
            sign = PLUS
        return unicyclic_key(G), sign

    def coeffs(kind, length, sign):
        return coeffs_exact(orient_unicyclic(make_family(kind, n, length), sign)).coeffs

    def names(members):
        lookup = {(r.canonical_key, r.sign): r.label for r in records}
        return sorted(lookup[m] for m in members)

    def level(groups, i):
        return {(r.canonical_key, r.sign) for r in groups[i]} if i < len(groups) else set()

    low = group_ties(records)
    high = group_ties(records[::-1])
    if n >= 6:
        want_min, want_second = {member("snl", 3)}, {member("snl", 4, MINUS)}
    elif n == 5:
        want_min, want_second = {member("snl", 3), member("snl", 4, MINUS)}, {member("snl", 4, PLUS)}
    else:
        want_min, want_second = {member("cycle", 4, MINUS)}, {member("snl", 3)}
    for name, want, got in (
        ("min-energy", want_min, level(low, 0)),
        ("second-min-energy", want_second, level(low, 1)),
        ("max-energy-unique", {member("pnl", 4, PLUS)}, level(high, 0)),
    ):
        report.add(name, names(want), names(got), want == got)

    by_girth = {}
    for r in records:
        by_girth.setdefault(r.girth, []).append(r)

    even = [r for r in records if r.girth % 2 == 0]
    pairs = {}
    for r in even:
        pairs.setdefault(r.canonical_key, {})[r.sign] = r.coeffs
    bad = sorted(k.decode() for k, p in pairs.items() if quasi_compare(p[PLUS], p[MINUS]) not in (GREATER, EQUAL))
    report.add("plus-dominates-minus", f"{len(pairs)} even-girth graphs ok", f"{len(pairs) - len(bad)} ok", not bad)

    for length in range(3, n + 1):
        group = by_girth.get(length, [])
        if len({r.canonical_key for r in group}) < 2:
            continue
        for kind, direction, signs in (("snl", GREATER, (PLUS, MINUS)), ("pnl", LESS, (PLUS,))):
            key = unicyclic_key(make_family(kind, n, length))
            bad = []
            checked = 0
            for r in group:
                if r.canonical_key == key or r.sign not in signs:
                    continue
                ref = coeffs(kind, length, r.sign)
                checked += 1
                if quasi_compare(r.coeffs.coeffs, ref) != direction:
                    bad.append(r.label)
            tag = "star-minimal" if kind == "snl" else "path-maximal"
            report.add(f"{tag}-girth-{length}", f"{checked} strict comparisons", f"{checked - len(bad)} strict, failing {bad}", not bad)

    s4m, s4p = coeffs("snl", 4, MINUS), coeffs("snl", 4, PLUS)
    for length in range(5, n + 1):
        slm, slp = coeffs("snl", length, MINUS), coeffs("snl", length, PLUS)
        if length >= 6 or n > length:
            got = (quasi_compare(s4m, s4p), quasi_compare(s4p, slm), quasi_compare(slm, slp))
            ok = got[0] == LESS and got[1] == LESS and got[2] in (LESS, EQUAL)
            report.add(f"star-chain-girth-{length}", "less, less, less|equal", ", ".join(got), ok)
        else:
            got = (quasi_compare(s4m, slp), quasi_compare(slp, s4p))
            report.add(f"star-chain-exception-girth-{length}", "less, less", ", ".join(got), got == (LESS, LESS))

    s3 = coeffs("snl", 3, PLUS)
    if n >= 6:
        want, got = (LESS,), (quasi_compare(s3, s4m),)
    elif n == 5:
        want, got = (EQUAL,), (quasi_compare(s3, s4m),)
    else:
        want, got = (LESS, LESS), (quasi_compare(s4m, s3), quasi_compare(s3, s4p))
    report.add("girth3-below-girth4-star", ", ".join(want), ", ".join(got), want == got)

    p4p = coeffs("pnl", 4, PLUS)
    for length in range(3, n + 1):
        if length == 4:
            continue
        got = tuple(quasi_compare(coeffs("pnl", length, s), p4p) for s in (PLUS, MINUS))
        report.add(f"path-chain-girth-{length}", "less, less", ", ".join(got), got == (LESS, LESS))
    return report
