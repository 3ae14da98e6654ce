"""Fat-TK certificates: verification, greedy search, dispersedness.

A fat TK(n, m) is a subdivision of the multigraph built from the
complete graph on n vertices by replacing every edge with m parallel
edges. Inside a simple graph it shows up as n branch vertices joined,
pairwise, by m internally disjoint paths, all interiors fresh. At most
one path per pair may be a bare edge: two unsubdivided parallel edges
would coincide in a simple graph.
"""

from __future__ import annotations

from collections.abc import Iterable, Mapping, Sequence
from dataclasses import dataclass
from itertools import combinations

from .connectivity import kappa, max_independent_paths, min_blocking_set, min_separator
from .graph import Graph, induced_subgraph


class FatTKCertificate:
    """Claimed fat TK(n, m): branch vertices plus per-pair path lists.

    Deliberately constructible from arbitrary data: validity is decided
    by verify_fat_tk against a host graph, never here, so certificates
    read from files can be examined and rejected with a reason.
    """

    __slots__ = ("branch", "m", "_paths")

    def __init__(
        self,
        branch: Iterable[int],
        m: int,
        paths: Mapping[tuple[int, int], Iterable[Sequence[int]]],
    ) -> None:
        self.branch: tuple[int, ...] = tuple(sorted(branch))
        self.m = m
        norm: dict[tuple[int, int], tuple[tuple[int, ...], ...]] = {}
        for (a, b), plist in paths.items():
            key = (a, b) if a <= b else (b, a)
            norm[key] = tuple(tuple(p) for p in plist)
        self._paths = norm

    def pair_keys(self) -> list[tuple[int, int]]:
        return sorted(self._paths)

    def paths_for(self, a: int, b: int) -> tuple[tuple[int, ...], ...]:
        key = (a, b) if a <= b else (b, a)
        return self._paths.get(key, ())

    @property
    def vertices(self) -> frozenset[int]:
        vs = set(self.branch)
        for plist in self._paths.values():
            for p in plist:
                vs.update(p)
        return frozenset(vs)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, FatTKCertificate):
            return NotImplemented
        return (
            self.branch == other.branch
            and self.m == other.m
            and self._paths == other._paths
        )

    def __repr__(self) -> str:
        return f"FatTKCertificate(n={len(self.branch)}, m={self.m})"


@dataclass(frozen=True)
class CertificateReport:
    ok: bool
    reason: str | None = None

    def __bool__(self) -> bool:
        return self.ok


@dataclass(frozen=True)
class FatTKFailure:
    """First pair the greedy router could not complete.

    routed is how many disjoint paths the pair admitted in the residual
    graph; separator blocks every further path there (any direct edge
    between the pair excluded).
    """

    pair: tuple[int, int]
    routed: int
    separator: frozenset[int]


@dataclass(frozen=True)
class DispersednessVerdict:
    """Outcome of the bounded dispersedness search.

    examined pairs each found certificate with the smallest vertex set
    blocking it from the probe. dispersed means every examined
    certificate had a blocker within the size bound; the claim is
    relative to the bounded search, not exhaustive.
    """

    dispersed: bool
    bound: int
    examined: tuple[tuple[FatTKCertificate, frozenset[int]], ...]

    @property
    def witness(self) -> tuple[FatTKCertificate, frozenset[int]] | None:
        """The certificate that settles the verdict, if any."""
        for cert, sep in self.examined:
            if (len(sep) <= self.bound) != self.dispersed:
                return cert, sep
        return self.examined[-1] if self.examined and not self.dispersed else None


def verify_fat_tk(g: Graph, cert: FatTKCertificate) -> CertificateReport:
    """Check every certificate invariant against the host graph.

    Never raises on bad certificates; the report carries the first
    violated condition.
    """
    n = len(cert.branch)
    if n < 2:
        return CertificateReport(False, f"need at least 2 branch vertices, have {n}")
    if len(set(cert.branch)) != n:
        return CertificateReport(False, "branch vertices are not distinct")
    if cert.m < 1:
        return CertificateReport(False, f"multiplicity must be at least 1, got {cert.m}")
    missing = [v for v in cert.branch if v not in g]
    if missing:
        return CertificateReport(False, f"branch vertices not in graph: {missing}")
    branch = set(cert.branch)
    expected = {(a, b) for a, b in combinations(cert.branch, 2)}
    have = set(cert.pair_keys())
    if have != expected:
        off = sorted(expected ^ have)
        return CertificateReport(False, f"pair lists wrong or missing for {off}")
    used_interior: set[int] = set()
    for a, b in sorted(expected):
        plist = cert.paths_for(a, b)
        if len(plist) != cert.m:
            return CertificateReport(
                False, f"pair ({a},{b}) has {len(plist)} paths, expected {cert.m}"
            )
        bare = 0
        for seq in plist:
            if len(seq) < 2:
                return CertificateReport(False, f"pair ({a},{b}) has a degenerate path {seq}")
            if len(set(seq)) != len(seq):
                return CertificateReport(False, f"path {seq} repeats a vertex")
            if {seq[0], seq[-1]} != {a, b}:
                return CertificateReport(
                    False, f"path {seq} does not join {a} and {b}"
                )
            for x, y in zip(seq, seq[1:]):
                if not g.has_edge(x, y):
                    return CertificateReport(False, f"claimed edge {x}-{y} is not in the graph")
            inner = set(seq[1:-1])
            if inner & branch:
                return CertificateReport(
                    False,
                    f"path {seq} passes through branch vertices {sorted(inner & branch)}",
                )
            if inner & used_interior:
                return CertificateReport(
                    False,
                    f"interior vertices {sorted(inner & used_interior)} are used twice",
                )
            used_interior |= inner
            if len(seq) == 2:
                bare += 1
        if bare > 1:
            return CertificateReport(
                False,
                f"pair ({a},{b}) uses the edge {a}-{b} as {bare} parallel paths",
            )
    return CertificateReport(True)


def find_fat_tk(g: Graph, u: Iterable[int], m: int) -> FatTKCertificate | FatTKFailure:
    """Greedy routing of a fat TK(n, m) on the branch set u.

    Pairs are processed in lexicographic order; each routes its m paths
    in the graph left after removing the other branch vertices and all
    interiors consumed so far, taking the m first members of the
    canonical independent-path family. Success is sound (the result
    passes verify_fat_tk); failure is not a nonexistence proof, since
    an earlier pair may have consumed vertices a cleverer assignment
    would have spared.
    """
    branch = tuple(sorted(set(u)))
    if len(branch) < 2:
        raise ValueError(f"need at least 2 branch vertices, got {len(branch)}")
    if m < 1:
        raise ValueError(f"multiplicity must be at least 1, got {m}")
    missing = [v for v in branch if v not in g]
    if missing:
        raise ValueError(f"branch vertices not in graph: {missing}")
    used: set[int] = set()
    routed: dict[tuple[int, int], tuple[tuple[int, ...], ...]] = {}
    for a, b in combinations(branch, 2):
        allowed = g.vertex_set - (set(branch) - {a, b}) - used
        sub = induced_subgraph(g, allowed)
        fam = max_independent_paths(sub, a, b)
        if len(fam) < m:
            return FatTKFailure((a, b), len(fam), _bottleneck(sub, a, b))
        chosen = tuple(p.vertices for p in list(fam)[:m])
        for seq in chosen:
            used.update(seq[1:-1])
        routed[(a, b)] = chosen
    cert = FatTKCertificate(branch, m, routed)
    report = verify_fat_tk(g, cert)
    if not report:
        raise AssertionError(f"greedy router built an invalid certificate: {report.reason}")
    return cert


def _bottleneck(sub: Graph, a: int, b: int) -> frozenset[int]:
    # separator blocking all further a-b routing, ignoring a direct edge
    if sub.has_edge(a, b):
        sub = Graph(sub.vertices, (e for e in sub.edges if e != tuple(sorted((a, b)))))
    return min_separator(sub, frozenset({a}), frozenset({b})).s


def kappa_necessary_check(g: Graph, u: Iterable[int], m: int) -> bool:
    """Pairwise connectivity test a fat TK(n, m) on u cannot avoid.

    False proves no such certificate exists; true proves nothing beyond
    the pairwise bound (necessary, not sufficient).
    """
    branch = tuple(sorted(set(u)))
    if len(branch) < 2:
        raise ValueError(f"need at least 2 branch vertices, got {len(branch)}")
    return all(kappa(g, a, b) >= m for a, b in combinations(branch, 2))


def is_dispersed(
    g: Graph,
    probe: Iterable[int],
    n: int,
    m: int,
    s: int,
    search_budget: int = 100,
) -> DispersednessVerdict:
    """Can the probe set be cut from every fat TK(n, m) by ≤ s vertices?

    Candidate branch sets are ranked by descending minimum pairwise
    connectivity (sets below m are skipped, they cannot host a
    certificate) and at most search_budget of them are run through the
    greedy router. Every certificate found is tested: the minimum
    blocking set between probe and the certificate's vertices may use
    vertices of either side, since the certificate may touch or contain
    probe vertices. The verdict is relative to this bounded search.
    """
    probe = frozenset(probe)
    if not probe <= g.vertex_set:
        raise ValueError(f"probe vertices not in graph: {sorted(probe - g.vertex_set)}")
    if n < 2 or m < 1 or s < 0:
        raise ValueError(f"need n >= 2, m >= 1, s >= 0, got n={n}, m={m}, s={s}")
    if search_budget < 1:
        raise ValueError(f"search budget must be positive, got {search_budget}")
    scored: list[tuple[int, tuple[int, ...]]] = []
    for cand in combinations(g.vertices, n):
        score = min(kappa(g, a, b) for a, b in combinations(cand, 2))
        if score >= m:
            scored.append((score, cand))
    scored.sort(key=lambda it: (-it[0], it[1]))
    examined: list[tuple[FatTKCertificate, frozenset[int]]] = []
    for _score, cand in scored[:search_budget]:
        found = find_fat_tk(g, cand, m)
        if isinstance(found, FatTKFailure):
            continue
        if probe:
            blocker = min_blocking_set(g, probe, found.vertices).s
        else:
            blocker = frozenset()
        examined.append((found, blocker))
        if len(blocker) > s:
            return DispersednessVerdict(False, s, tuple(examined))
    return DispersednessVerdict(True, s, tuple(examined))
