"""Knot diagrams as combinatorial objects.

A diagram is a 4-valent planar map with over/under data: every crossing has
four slots 0..3 in *counterclockwise* rotation order, the two strands pass
through opposite slots (0-2 and 1-3), and ``over`` records which diagonal is
the over-strand.  Edges are a fixed-point-free involution (``mates``) on the
darts (crossing, slot).  Crossingless circle components are counted in
``loops``.

Crossing sign convention: with both strands oriented, a crossing is positive
when the under-strand enters at the slot counterclockwise-next from the slot
where the over-strand enters (right-hand rule: over from lower-left to upper
right, both strands pointing up).

DT codes follow the usual table convention: traversal passages are numbered
1..2n, each crossing receives one odd and one even number, and the code lists
the even numbers in the order of the odd ones.  An unsigned code means the
alternating diagram in which every even passage goes under; a negative even
label switches that crossing.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence

Dart = tuple[int, int]


class DiagramError(ValueError):
    """Base error for diagram-level failures."""


class MalformedCodeError(DiagramError):
    """The DT code text violates the label constraints."""


class NotRealizableError(DiagramError):
    """The DT code has no planar realization."""


# ---------------------------------------------------------------------------
# DT codes
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class DTCode:
    labels: tuple[int, ...]

    @property
    def crossing_count(self) -> int:
        return len(self.labels)

    def __str__(self) -> str:
        return " ".join(str(x) for x in self.labels)

    def unsigned(self) -> "DTCode":
        return DTCode(tuple(abs(x) for x in self.labels))


def parse_dt(text: str) -> DTCode:
    """Parse whitespace-separated signed even integers into a DT code."""
    try:
        labels = tuple(int(tok) for tok in text.replace(",", " ").split())
    except ValueError as exc:
        raise MalformedCodeError(f"non-integer token in {text!r}") from exc
    if not labels:
        raise MalformedCodeError("empty DT code")
    n = len(labels)
    magnitudes = sorted(abs(x) for x in labels)
    if any(x % 2 or x == 0 for x in magnitudes):
        raise MalformedCodeError(f"labels must be nonzero even integers: {text!r}")
    if magnitudes != list(range(2, 2 * n + 1, 2)):
        raise MalformedCodeError(f"labels must cover 2..2n exactly once: {text!r}")
    return DTCode(labels)


# ---------------------------------------------------------------------------
# The diagram structure
# ---------------------------------------------------------------------------


class Diagram:
    """A knot or link diagram (4-valent planar map with over/under data).

    Instances are treated as immutable values: all editing operations return
    new diagrams.  Crossing ids are arbitrary non-negative integers and are
    not compacted by edits.
    """

    __slots__ = ("mates", "over", "loops", "basepoint")

    def __init__(
        self,
        mates: dict[Dart, Dart],
        over: dict[int, int],
        loops: int = 0,
        basepoint: Dart | None = None,
    ):
        self.mates = mates
        self.over = over
        self.loops = loops
        self.basepoint = basepoint

    # -- basic structure -------------------------------------------------

    @property
    def crossings(self) -> list[int]:
        return sorted(self.over)

    @property
    def crossing_count(self) -> int:
        return len(self.over)

    def copy(self) -> "Diagram":
        return Diagram(dict(self.mates), dict(self.over), self.loops, self.basepoint)

    def check(self) -> None:
        """Structural sanity: mates is a fixed-point-free involution on the
        darts of the stored crossings."""
        darts = {(c, s) for c in self.over for s in range(4)}
        assert set(self.mates) == darts, "mates domain mismatch"
        for d, e in self.mates.items():
            assert d != e and self.mates[e] == d, f"broken involution at {d}"

    # -- traversal -------------------------------------------------------

    def next_dart(self, dart: Dart) -> Dart:
        """From an entering dart, pass through the crossing and jump the
        outgoing edge; returns the next entering dart."""
        c, s = dart
        return self.mates[(c, (s + 2) % 4)]

    def strand_orbit(self, start: Dart) -> list[Dart]:
        """All entering darts hit when walking from ``start``."""
        out = [start]
        d = self.next_dart(start)
        while d != start:
            out.append(d)
            d = self.next_dart(d)
        return out

    def components(self) -> list[list[Dart]]:
        """Oriented traversals, one per link component.

        Each component is traversed once in the direction defined by its
        minimal dart; traversals are listed by that minimal dart.
        """
        seen: set[Dart] = set()
        comps: list[list[Dart]] = []
        for c in self.crossings:
            for s in range(4):
                d = (c, s)
                if d in seen:
                    continue
                orbit = self.strand_orbit(d)
                rev = self.strand_orbit(self.reverse_dart(d))
                seen.update(orbit)
                seen.update(rev)
                best = min(min(orbit), min(rev))
                if best in orbit:
                    i = orbit.index(best)
                    comps.append(orbit[i:] + orbit[:i])
                else:
                    i = rev.index(best)
                    comps.append(rev[i:] + rev[:i])
        comps.sort(key=lambda orb: orb[0])
        return comps

    def reverse_dart(self, dart: Dart) -> Dart:
        """The entering dart of the same edge-end walked the other way."""
        c, s = dart
        return (c, (s + 2) % 4)

    def in_slots(self) -> dict[int, tuple[int, int]]:
        """Per crossing, the two entering slots under the canonical component
        orientations."""
        ins: dict[int, list[int]] = {c: [] for c in self.over}
        for comp in self.components():
            for c, s in comp:
                ins[c].append(s)
        return {c: tuple(sorted(v)) for c, v in ins.items()}

    # -- local data -------------------------------------------------------

    def sign(self, c: int, ins: dict[int, tuple[int, int]] | None = None) -> int:
        """Crossing sign under the canonical (or supplied) orientations."""
        if ins is None:
            ins = self.in_slots()
        s_over = [s for s in ins[c] if s % 2 == self.over[c]][0]
        s_under = [s for s in ins[c] if s % 2 != self.over[c]][0]
        return 1 if (s_over + 1) % 4 == s_under else -1

    def signs(self) -> dict[int, int]:
        ins = self.in_slots()
        return {c: self.sign(c, ins) for c in self.over}

    def writhe(self) -> int:
        return sum(self.signs().values())

    # -- faces / planarity ------------------------------------------------

    def face_orbits(self) -> list[list[Dart]]:
        """Faces of the underlying map.

        The face through dart (c, s) is the region at the corner between
        slots s and s+1; the orbit steps to mates[(c, s+1)].
        """
        faces = []
        seen: set[Dart] = set()
        for c in self.crossings:
            for s in range(4):
                d = (c, s)
                if d in seen:
                    continue
                face = []
                while d not in seen:
                    seen.add(d)
                    face.append(d)
                    cc, ss = d
                    d = self.mates[(cc, (ss + 1) % 4)]
                faces.append(face)
        return faces

    def face_count(self) -> int:
        return len(self.face_orbits())

    def is_planar_connected(self) -> bool:
        n = self.crossing_count
        if n == 0:
            return True
        if len(self.components()) < 1:
            return False
        comps = self._crossing_components()
        if len(comps) != 1:
            return False
        return self.face_count() == n + 2

    def _crossing_components(self) -> list[set[int]]:
        parent = {c: c for c in self.over}

        def find(x: int) -> int:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for (c, _), (d, _) in self.mates.items():
            rc, rd = find(c), find(d)
            if rc != rd:
                parent[rc] = rd
        groups: dict[int, set[int]] = {}
        for c in self.over:
            groups.setdefault(find(c), set()).add(c)
        return list(groups.values())

    # -- Seifert data -------------------------------------------------------

    def seifert_smoothing_pairing(self, c: int, ins: dict[int, tuple[int, int]]) -> list[tuple[int, int]]:
        """The orientation-respecting smoothing at c, as a slot matching."""
        i = set(ins[c])
        if i in ({0, 1}, {2, 3}):
            return [(0, 3), (1, 2)]
        return [(0, 1), (2, 3)]

    def seifert_circle_count(self) -> int:
        ins = self.in_slots()
        parent: dict[Dart, Dart] = {(c, s): (c, s) for c in self.over for s in range(4)}

        def find(x: Dart) -> Dart:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        def union(a: Dart, b: Dart) -> None:
            ra, rb = find(a), find(b)
            if ra != rb:
                parent[ra] = rb

        for d, e in self.mates.items():
            union(d, e)
        for c in self.over:
            for a, b in self.seifert_smoothing_pairing(c, ins):
                union((c, a), (c, b))
        roots = {find(d) for d in parent}
        return len(roots) + self.loops

    def genus(self) -> int:
        """Genus of the surface from the oriented smoothing, (c - n + 1)/2."""
        c = self.crossing_count
        n = self.seifert_circle_count()
        if (c - n + 1) % 2:
            raise DiagramError("c - n + 1 is odd; not a knot diagram?")
        return (c - n + 1) // 2

    # -- chord diagram / linkedness ----------------------------------------

    def chord_diagram(self) -> "ChordDiagram":
        comps = self.components()
        if len(comps) != 1:
            raise DiagramError("chord diagram needs a one-component diagram")
        order = comps[0]
        signs = self.signs()
        pos: dict[int, list[int]] = {}
        for i, (c, _s) in enumerate(order):
            pos.setdefault(c, []).append(i)
        chords = {c: (p[0], p[1], signs[c]) for c, p in pos.items()}
        return ChordDiagram(len(order), chords)

    # -- edits ------------------------------------------------------------

    def switch_crossing(self, c: int) -> "Diagram":
        if c not in self.over:
            raise DiagramError(f"no crossing {c}")
        d = self.copy()
        d.over[c] ^= 1
        return d

    def mirror(self) -> "Diagram":
        d = self.copy()
        for c in d.over:
            d.over[c] ^= 1
        return d

    def _welded(self, removal: dict[int, list[tuple[int, int]]]) -> "Diagram":
        """Remove crossings, rewiring their slots along the given wires.

        ``removal`` maps each removed crossing to a list of slot pairs
        (wires).  Unwired slots of removed crossings must be joined by an
        edge among themselves (their edge simply disappears).  Closed cycles
        made entirely of wires and internal edges become free loops.
        """
        wire: dict[Dart, Dart] = {}
        for c, pairs in removal.items():
            for a, b in pairs:
                wire[(c, a)] = (c, b)
                wire[(c, b)] = (c, a)
        removed = set(removal)
        new_mates = dict(self.mates)
        new_over = {c: o for c, o in self.over.items() if c not in removed}
        for c in removed:
            for s in range(4):
                del new_mates[(c, s)]
        loops = self.loops
        visited: set[Dart] = set()

        def is_internal(d: Dart) -> bool:
            return d[0] in removed

        # Walk from every external dart that points into the removed region.
        for d0 in list(self.mates):
            if is_internal(d0) or not is_internal(self.mates[d0]):
                continue
            d = self.mates[d0]
            while True:
                visited.add(d)
                if d not in wire:
                    raise DiagramError("walk entered an unwired slot")
                d = wire[d]
                visited.add(d)
                nxt = self.mates[d]
                if not is_internal(nxt):
                    new_mates[d0] = nxt
                    new_mates[nxt] = d0
                    break
                d = nxt
        # Fix external-external welds where both endpoints got rewritten.
        # (handled above: new_mates[d0] set from one side; ensure symmetry)
        for d, e in list(new_mates.items()):
            new_mates[e] = d
        # Count internal cycles (free loops) among unvisited wired darts.
        for c in removed:
            for s in range(4):
                d = (c, s)
                if d in visited or d not in wire:
                    continue
                start = d
                while True:
                    visited.add(d)
                    d = wire[d]
                    visited.add(d)
                    d = self.mates[d]
                    if not is_internal(d):
                        raise DiagramError("internal cycle escaped")
                    if d == start:
                        loops += 1
                        break
        bp = self.basepoint
        if bp is not None and bp[0] in removed:
            bp = None
        return Diagram(new_mates, new_over, loops, bp)

    def smooth(self, c: int, pairing: str) -> "Diagram":
        """Remove crossing c by one of the two planar smoothings.

        pairing "v" joins slots (0,3) and (1,2); "h" joins (0,1) and (2,3).
        """
        pairs = [(0, 3), (1, 2)] if pairing == "v" else [(0, 1), (2, 3)]
        return self._welded({c: pairs})

    def smooth_oriented(self, c: int) -> "Diagram":
        ins = self.in_slots()
        return self._welded({c: self.seifert_smoothing_pairing(c, ins)})

    def remove_r2_pair(self, c: int, d: int) -> "Diagram":
        return self._welded({c: [(0, 2), (1, 3)], d: [(0, 2), (1, 3)]})

    # -- Reidemeister I/II simplification ---------------------------------

    def _find_r1(self) -> tuple[int, int] | None:
        for c in self.crossings:
            for s in range(4):
                if self.mates[(c, s)] == (c, (s + 1) % 4):
                    return (c, s)
        return None

    def _find_r2(self) -> tuple[int, int] | None:
        for c in self.crossings:
            for s in range(4):
                d, t = self.mates[(c, s)]
                if d == c or d < c:
                    continue
                d2, t2 = self.mates[(c, (s + 1) % 4)]
                if d2 != d or t2 != (t - 1) % 4:
                    continue
                # bigon between c (slots s, s+1) and d (slots t-1, t)
                if (self.over[c] == s % 2) == (self.over[d] == t % 2):
                    return (c, d)
        return None

    def simplify_r1_r2(self) -> "Diagram":
        """Remove kinks and cancellable bigons to a fixed point,
        lowest-crossing-id first."""
        d = self
        while True:
            r1 = d._find_r1()
            if r1 is not None:
                c, s = r1
                d = d._welded({c: [((s + 2) % 4, (s + 3) % 4)]})
                continue
            r2 = d._find_r2()
            if r2 is not None:
                d = d.remove_r2_pair(*r2)
                continue
            return d

    # -- twist insertion ----------------------------------------------------

    def _chain_replace(self, c: int, count: int, over_bit: int, rotate: int) -> "Diagram":
        """Replace crossing c by a chain of ``count`` crossings of type
        ``over_bit`` stacked along the axis given by ``rotate`` (0: chain
        bottom at slots (0,1); 1: chain bottom at slots (1,2))."""
        if count < 1:
            raise DiagramError("chain length must be >= 1")
        ext = [self.mates[(c, (s + rotate) % 4)] for s in range(4)]
        # Guard: a mate may be c itself; translate to new chain slots later.
        base = (max(self.over) + 1) if self.over else 0
        ids = [base + i for i in range(count)]
        new_mates = dict(self.mates)
        new_over = dict(self.over)
        del new_over[c]
        for s in range(4):
            del new_mates[(c, s)]

        def to_new(d: Dart) -> Dart:
            if d[0] == c:
                # external end that loops back into the replaced crossing
                s = (d[1] - rotate) % 4
                if s in (0, 1):
                    return (ids[0], s)
                return (ids[-1], s)
            return d

        for i, cid in enumerate(ids):
            new_over[cid] = over_bit
        # internal ladder edges
        for i in range(count - 1):
            a, b = ids[i], ids[i + 1]
            new_mates[(a, 3)] = (b, 0)
            new_mates[(b, 0)] = (a, 3)
            new_mates[(a, 2)] = (b, 1)
            new_mates[(b, 1)] = (a, 2)
        # external attachments: bottom of first, top of last
        attach = {
            (ids[0], 0): to_new(ext[0]),
            (ids[0], 1): to_new(ext[1]),
            (ids[-1], 2): to_new(ext[2]),
            (ids[-1], 3): to_new(ext[3]),
        }
        for d, e in attach.items():
            new_mates[d] = e
            new_mates[e] = d
        bp = self.basepoint
        if bp is not None and bp[0] == c:
            bp = None
        out = Diagram(new_mates, new_over, self.loops, bp)
        return out

    def reverse_axis_rotate(self, c: int) -> int:
        """Rotation (0 or 1) whose chain axis extends c into a reverse
        (antiparallel) twist region."""
        ins = set(self.in_slots()[c])
        # ins {0,3} or {1,2}: strands antiparallel along the (0,1)/(2,3) axis.
        if ins in ({0, 3}, {1, 2}):
            return 0
        return 1

    def twist_chain(self, c: int, half_twists: int, kind: str = "reverse") -> "Diagram":
        """Replace crossing c by |half_twists| half-twists along the reverse
        or parallel axis.  Positive counts keep the crossing type, negative
        counts use the switched type; 0 smooths the crossing along the axis.

        One half-twist with positive sign reproduces the diagram itself.
        """
        if c not in self.over:
            raise DiagramError(f"no crossing {c}")
        if kind not in ("reverse", "parallel"):
            raise DiagramError("kind must be 'reverse' or 'parallel'")
        rot = self.reverse_axis_rotate(c)
        if kind == "parallel":
            rot ^= 1
        if half_twists == 0:
            # axis smoothing: with rotate=0 the region's 0-tangle joins
            # slots (0,3) and (1,2); with rotate=1 it joins (0,1),(2,3).
            return self.smooth(c, "v" if rot == 0 else "h")
        over_bit = self.over[c]
        if rot == 1:
            # chain slots are the crossing's slots rotated by one, which
            # exchanges the two diagonals.
            over_bit ^= 1
        if half_twists < 0:
            over_bit ^= 1
        return self._chain_replace(c, abs(half_twists), over_bit, rot)

    def apply_twist(self, c: int, kind: str = "reverse", half_twist_pairs: int = 1) -> "Diagram":
        """Insert 2*half_twist_pairs half-twists next to crossing c (a
        genus-preserving move when kind='reverse')."""
        if half_twist_pairs < 1:
            raise DiagramError("half_twist_pairs must be >= 1")
        return self.twist_chain(c, 1 + 2 * half_twist_pairs, kind)

    # -- predicates ---------------------------------------------------------

    def is_alternating(self) -> bool:
        for comp in self.components():
            for c, s in comp:
                pass
        comps = self.components()
        for comp in comps:
            prev = None
            states = []
            for c, s in comp:
                # entering dart (c, s): this passage is over iff slot parity
                # matches the over diagonal
                states.append(self.over[c] == s % 2)
            for i, st in enumerate(states):
                if st == states[(i + 1) % len(states)]:
                    return False
        return True

    def is_positive(self) -> bool:
        return all(v > 0 for v in self.signs().values())

    def seifert_graph(self) -> tuple[dict[Dart, int], list[tuple[int, int, int]]]:
        """Seifert circles and the edges between them.

        Returns (circle id per dart, edges) where each edge is
        (circle_a, circle_b, crossing sign).
        """
        ins = self.in_slots()
        parent: dict[Dart, Dart] = {(c, s): (c, s) for c in self.over for s in range(4)}

        def find(x: Dart) -> Dart:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        def union(a: Dart, b: Dart) -> None:
            ra, rb = find(a), find(b)
            if ra != rb:
                parent[ra] = rb

        for d, e in self.mates.items():
            union(d, e)
        for c in self.over:
            for a, b in self.seifert_smoothing_pairing(c, ins):
                union((c, a), (c, b))
        ids: dict[Dart, int] = {}
        for d in parent:
            r = find(d)
            if r not in ids:
                ids[r] = len(ids)
        circle_of = {d: ids[find(d)] for d in parent}
        signs = self.signs()
        edges = []
        for c in self.over:
            pairing = self.seifert_smoothing_pairing(c, ins)
            a = circle_of[(c, pairing[0][0])]
            b = circle_of[(c, pairing[1][0])]
            edges.append((a, b, signs[c]))
        return circle_of, edges

    def is_homogeneous(self) -> bool:
        """Every block (2-connected component) of the Seifert graph carries
        crossings of a single sign."""
        _, edges = self.seifert_graph()
        if not edges:
            return True
        blocks = _biconnected_edge_blocks(edges)
        for block in blocks:
            bs = {edges[i][2] for i in block}
            if len(bs) > 1:
                return False
        return True

    # -- export -------------------------------------------------------------

    def to_json(self) -> str:
        comps = self.components()
        edge_id: dict[frozenset, int] = {}
        for d, e in self.mates.items():
            key = frozenset((d, e))
            if key not in edge_id:
                edge_id[key] = len(edge_id)
        signs = self.signs()
        crossings = []
        for c in self.crossings:
            edges = [edge_id[frozenset(((c, s), self.mates[(c, s)]))] for s in range(4)]
            crossings.append(
                {
                    "id": c,
                    "edges_ccw": edges,
                    "over_diagonal": self.over[c],
                    "sign": signs[c],
                }
            )
        return json.dumps(
            {
                "crossings": crossings,
                "free_loops": self.loops,
                "components": len(comps),
            },
            indent=None,
            sort_keys=True,
        )


def _biconnected_edge_blocks(edges: list[tuple[int, int, int]]) -> list[list[int]]:
    """Partition edge indices of a multigraph into 2-edge-connected blocks
    (self-loops are their own blocks)."""
    adj: dict[int, list[tuple[int, int]]] = {}
    blocks: list[list[int]] = []
    for i, (a, b, _s) in enumerate(edges):
        if a == b:
            blocks.append([i])
            continue
        adj.setdefault(a, []).append((b, i))
        adj.setdefault(b, []).append((a, i))
    visited: set[int] = set()
    depth: dict[int, int] = {}
    low: dict[int, int] = {}
    stack: list[int] = []

    def dfs(root: int) -> None:
        todo: list[tuple[int, int, Iterator]] = [(root, -1, iter(adj.get(root, ())))]
        depth[root] = 0
        low[root] = 0
        visited.add(root)
        used_edge: set[int] = set()
        while todo:
            v, parent_edge, it = todo[-1]
            advanced = False
            for w, ei in it:
                if ei == parent_edge or ei in used_edge:
                    continue
                used_edge.add(ei)
                stack.append(ei)
                if w not in visited:
                    visited.add(w)
                    depth[w] = depth[v] + 1
                    low[w] = depth[w]
                    todo.append((w, ei, iter(adj.get(w, ()))))
                    advanced = True
                    break
                low[v] = min(low[v], depth[w])
            if advanced:
                continue
            todo.pop()
            if todo:
                u = todo[-1][0]
                low[u] = min(low[u], low[v])
                if low[v] >= depth[u]:
                    block = []
                    while True:
                        ei = stack.pop()
                        block.append(ei)
                        if ei == parent_edge:
                            break
                    blocks.append(block)

    for i, (a, b, _s) in enumerate(edges):
        if a != b and a not in visited:
            dfs(a)
    return blocks


# ---------------------------------------------------------------------------
# Chord diagrams and crossing equivalence
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ChordDiagram:
    """Signed chords on a 2n-point circle (the Gauss-diagram view)."""

    size: int  # number of circle positions, 2n
    chords: dict[int, tuple[int, int, int]]  # crossing -> (pos1, pos2, sign)

    def linked(self, p: int, q: int) -> bool:
        a1, b1, _ = self.chords[p]
        a2, b2, _ = self.chords[q]
        between = (a1 < a2 < b1) != (a1 < b2 < b1)
        return between

    def linked_set(self, p: int) -> frozenset[int]:
        return frozenset(q for q in self.chords if q != p and self.linked(p, q))


@dataclass(frozen=True)
class EquivClasses:
    sim_classes: tuple[tuple[int, ...], ...]
    star_classes: tuple[tuple[int, ...], ...]
    linked: frozenset[frozenset[int]]

    def sim_class_of(self, c: int) -> tuple[int, ...]:
        for cl in self.sim_classes:
            if c in cl:
                return cl
        raise KeyError(c)


def equivalence(d: Diagram | ChordDiagram) -> EquivClasses:
    """Linkedness and the twist-equivalence partitions of the crossings.

    Two crossings are equivalent when they are linked with the same other
    crossings; the unlinked equivalent pairs form the reverse-clasp classes
    and the linked ones the parallel-clasp classes.
    """
    cd = d.chord_diagram() if isinstance(d, Diagram) else d
    ids = sorted(cd.chords)
    linked_pairs = set()
    for i, p in enumerate(ids):
        for q in ids[i + 1:]:
            if cd.linked(p, q):
                linked_pairs.add(frozenset((p, q)))

    def same_outside(p: int, q: int) -> bool:
        for c in ids:
            if c in (p, q):
                continue
            if (frozenset((c, p)) in linked_pairs) != (frozenset((c, q)) in linked_pairs):
                return False
        return True

    def classes(want_linked: bool) -> tuple[tuple[int, ...], ...]:
        parent = {p: p for p in ids}

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for i, p in enumerate(ids):
            for q in ids[i + 1:]:
                if (frozenset((p, q)) in linked_pairs) == want_linked and same_outside(p, q):
                    parent[find(p)] = find(q)
        groups: dict[int, list[int]] = {}
        for p in ids:
            groups.setdefault(find(p), []).append(p)
        return tuple(tuple(sorted(g)) for g in sorted(groups.values()))

    return EquivClasses(classes(False), classes(True), frozenset(linked_pairs))


def t2prime_reducible(d: Diagram | ChordDiagram) -> bool:
    """True iff three chords are pairwise unlinked and linked with the same
    other chords (the flype-invariant reducibility criterion)."""
    cd = d.chord_diagram() if isinstance(d, Diagram) else d
    eq = equivalence(cd)
    return any(len(cl) >= 3 for cl in eq.sim_classes)


def is_clasp_pair(d: Diagram, p: int, q: int) -> bool:
    """The two chords occupy adjacent position pairs on the circle (a clasp
    visible in this diagram, no flype needed)."""
    cd = d.chord_diagram()
    a1, b1, _ = cd.chords[p]
    a2, b2, _ = cd.chords[q]
    n = cd.size

    def adjacent(x: int, y: int) -> bool:
        return (x - y) % n in (1, n - 1)

    return (adjacent(a1, a2) and adjacent(b1, b2)) or (adjacent(a1, b2) and adjacent(b1, a2))


def resolve_clasp(d: Diagram, p: int, q: int) -> Diagram:
    """Remove a clasp pair (two crossings forming adjacent parallel chords).

    The two strands are pulled apart; this is an isotopy if the pair has
    clasp over/under pattern, which is checked.
    """
    eq = equivalence(d)
    pair = frozenset((p, q))
    sim = any(set(cl) == set(pair) for cl in eq.sim_classes if len(cl) == 2)
    star = any(set(cl) == set(pair) for cl in eq.star_classes if len(cl) == 2)
    if not (sim or star):
        raise DiagramError(f"crossings {p},{q} are not an equivalent pair")
    if not is_clasp_pair(d, p, q):
        raise DiagramError(f"crossings {p},{q} are not adjacent in this diagram")
    return d.remove_r2_pair(p, q)


# ---------------------------------------------------------------------------
# DT realization
# ---------------------------------------------------------------------------


def realize(code: DTCode) -> Diagram:
    """Embed a DT code as a planar diagram.

    The two possible rotation choices per crossing are searched with the
    first crossing's choice pinned (the global reflection); the first
    assignment whose map has the planar face count wins.  Unsigned codes get
    the alternating over/under assignment with even passages under.
    """
    n = code.crossing_count
    # passage -> (crossing, is_even); passages 1..2n
    crossing_of: dict[int, tuple[int, bool]] = {}
    for i, lab in enumerate(code.labels):
        crossing_of[2 * i + 1] = (i, False)
        e = abs(lab)
        if e in crossing_of:
            raise MalformedCodeError(f"label {lab} duplicates a passage")
        crossing_of[e] = (i, True)
    if len(crossing_of) != 2 * n:
        raise MalformedCodeError("odd/even passages collide")

    def build(bits: int) -> Diagram:
        # slots: 0 = odd in, 2 = odd out; bit 0: 1 = even in, 3 = even out;
        # bit 1: 3 = even in, 1 = even out.
        mates: dict[Dart, Dart] = {}
        for p in range(1, 2 * n + 1):
            c, is_even = crossing_of[p]
            nc, n_even = crossing_of[1 + p % (2 * n)]
            if not is_even:
                out = (c, 2)
            else:
                out = (c, 3) if not (bits >> c) & 1 else (c, 1)
            if not n_even:
                inn = (nc, 0)
            else:
                inn = (nc, 1) if not (bits >> nc) & 1 else (nc, 3)
            mates[out] = inn
            mates[inn] = out
        over = {}
        for i, lab in enumerate(code.labels):
            # even passage under unless the label is negative
            over[i] = 0 if lab > 0 else 1
        return Diagram(mates, over, 0, (crossing_of[1][0], 0))

    for bits in range(1 << max(n - 1, 0)):
        d = build(bits << 1 if False else bits)
        if d.face_count() == n + 2:
            return d
    raise NotRealizableError(f"DT code {code} has no planar realization")


def extract_dt(d: Diagram, start: Dart | None = None) -> DTCode:
    """Read a DT code back off a knot diagram, starting at the diagram's
    basepoint (or its minimal dart)."""
    comps = d.components()
    if len(comps) != 1:
        raise DiagramError("DT extraction needs a knot diagram")
    orbit = comps[0]
    start = start if start is not None else d.basepoint
    if start is not None:
        if start in orbit:
            i = orbit.index(start)
            orbit = orbit[i:] + orbit[:i]
        else:
            rev = d.strand_orbit(start)
            orbit = rev
    passages: dict[int, list[tuple[int, int]]] = {}
    for idx, (c, s) in enumerate(orbit):
        passages.setdefault(c, []).append((idx + 1, s))
    labels = []
    for c, ps in sorted(passages.items(), key=lambda kv: min(p for p, _ in kv[1])):
        pass
    odd_to_even: dict[int, int] = {}
    for c, ps in passages.items():
        (p1, s1), (p2, s2) = ps
        if p1 % 2 == 0:
            (p1, s1), (p2, s2) = (p2, s2), (p1, s1)
        if p1 % 2 == 0 or p2 % 2 == 1:
            raise DiagramError("diagram passages do not alternate parity")
        # even passage over iff its slot parity matches the over diagonal
        even_over = d.over[c] == s2 % 2
        odd_to_even[p1] = -p2 if even_over else p2
    return DTCode(tuple(odd_to_even[p] for p in sorted(odd_to_even)))


def reflect(d: Diagram) -> Diagram:
    """The planar reflection: rotations reverse, over/under kept (yields the
    mirror knot while preserving alternation)."""
    def r(dart: Dart) -> Dart:
        c, s = dart
        return (c, (4 - s) % 4)

    mates = {r(a): r(b) for a, b in d.mates.items()}
    bp = r(d.basepoint) if d.basepoint is not None else None
    return Diagram(mates, dict(d.over), d.loops, bp)


def unknot_diagram() -> Diagram:
    return Diagram({}, {}, loops=1)
