"""Riguet congruences on explicit finite categories and their quotients.

A Riguet congruence pairs an equivalence on objects with, for every
"matrix" ``(a, b, a2, b2)`` with ``a ~ a2`` and ``b ~ b2``, a relation between
``Hom(a, b)`` and ``Hom(a2, b2)``. The five conditions checked here are:

1. diagonal: ``(f, f)`` is related in the matrix ``(a, b, a, b)``;
2. symmetry: the relation at ``(a2, b2, a, b)`` is the converse of ``(a, b, a2, b2)``;
3. vertical composition: related-to-related is related;
4. horizontal composition: ``(g o f, g2 o f2)`` is related whenever the factors are;
5. lifting: every ``f: a -> b`` is related to some ``f2: a2 -> b2``.

Relations are stored sparsely; a missing matrix key means the empty relation.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product
from typing import Any, Hashable, Iterable, Mapping, Sequence

from monoidcats.errors import (
    AxiomsNotVerified,
    MalformedCategory,
    MalformedCongruence,
    NotACongruence,
    TooLarge,
)

Obj = Hashable
Mor = Hashable

CONDITION_NAMES = {
    1: "diagonal",
    2: "symmetry",
    3: "vertical composition",
    4: "horizontal composition",
    5: "lifting",
}

MAX_DOT_OBJECTS = 200


class FiniteCategory:
    """A category given by explicit hom lists, a composition table and identities.

    ``compose_table[(g, f)]`` is ``g o f`` and must be defined exactly for the
    pairs with ``cod(f) == dom(g)``.
    """

    def __init__(
        self,
        objects: Sequence[Obj],
        homs: Mapping[tuple[Obj, Obj], Sequence[Mor]],
        compose_table: Mapping[tuple[Mor, Mor], Mor],
        identities: Mapping[Obj, Mor],
        labels: Mapping[Any, str] | None = None,
        validate: bool = True,
        check_associativity: bool = True,
    ):
        self.objects = tuple(objects)
        if len(set(self.objects)) != len(self.objects):
            raise MalformedCategory("duplicate object ids")
        objset = set(self.objects)
        self.homs: dict[tuple[Obj, Obj], tuple[Mor, ...]] = {}
        self.dom: dict[Mor, Obj] = {}
        self.cod: dict[Mor, Obj] = {}
        for (x, y), ms in homs.items():
            if x not in objset or y not in objset:
                raise MalformedCategory(f"hom ({x}, {y}) mentions an unknown object")
            for m in ms:
                if m in self.dom:
                    raise MalformedCategory(f"morphism {m!r} listed twice")
                self.dom[m] = x
                self.cod[m] = y
            self.homs[(x, y)] = tuple(ms)
        self.order: dict[Mor, int] = {}
        for x in self.objects:
            for y in self.objects:
                for m in self.homs.get((x, y), ()):
                    self.order[m] = len(self.order)
        self.compose_table = dict(compose_table)
        self.identities = dict(identities)
        self.labels = dict(labels or {})
        if validate:
            self.validate(check_associativity)

    def hom(self, x: Obj, y: Obj) -> tuple[Mor, ...]:
        return self.homs.get((x, y), ())

    @property
    def morphisms(self) -> list[Mor]:
        return sorted(self.order, key=self.order.__getitem__)

    def compose(self, g: Mor, f: Mor) -> Mor:
        try:
            return self.compose_table[(g, f)]
        except KeyError:
            raise MalformedCategory(f"{g!r} o {f!r} is undefined") from None

    def label(self, item) -> str:
        return self.labels.get(item, str(item))

    def out_of(self, x: Obj) -> list[Mor]:
        """Morphisms with domain ``x`` in stable order."""
        if not hasattr(self, "_out"):
            out: dict[Obj, list[Mor]] = {o: [] for o in self.objects}
            for m in sorted(self.order, key=self.order.__getitem__):
                out[self.dom[m]].append(m)
            self._out = out
        return self._out[x]

    def validate(self, check_associativity: bool = True) -> None:
        for x in self.objects:
            i = self.identities.get(x)
            if i is None or self.dom.get(i) != x or self.cod.get(i) != x:
                raise MalformedCategory(f"identity of {x!r} is missing or not an endomorphism")
        expected = 0
        for f in self.order:
            for g in self.out_of(self.cod[f]):
                expected += 1
                h = self.compose_table.get((g, f))
                if h is None:
                    raise MalformedCategory(f"composite {g!r} o {f!r} is missing")
                if self.dom.get(h) != self.dom[f] or self.cod.get(h) != self.cod[g]:
                    raise MalformedCategory(f"composite {g!r} o {f!r} = {h!r} has the wrong type")
        if expected != len(self.compose_table):
            raise MalformedCategory("composition table has entries for non-composable pairs")
        for f in self.order:
            if self.compose(self.identities[self.cod[f]], f) != f:
                raise MalformedCategory(f"left unit law fails at {f!r}")
            if self.compose(f, self.identities[self.dom[f]]) != f:
                raise MalformedCategory(f"right unit law fails at {f!r}")
        if check_associativity:
            bad = associativity_violation(self)
            if bad is not None:
                raise MalformedCategory(f"associativity fails at {bad}")


def associativity_violation(C: FiniteCategory):
    """First composable triple ``(h, g, f)`` with ``(h g) f != h (g f)``, or ``None``."""
    table = C.compose_table
    for f in C.morphisms:
        for g in C.out_of(C.cod[f]):
            gf = table[(g, f)]
            for h in C.out_of(C.cod[g]):
                if table[(table[(h, g)], f)] != table[(h, gf)]:
                    return (h, g, f)
    return None


class RiguetCongruence:
    """Object partition plus sparse per-matrix morphism relations."""

    def __init__(
        self,
        blocks: Iterable[Iterable[Obj]],
        fl: Mapping[tuple[Obj, Obj, Obj, Obj], Iterable[tuple[Mor, Mor]]],
    ):
        self.blocks = tuple(tuple(b) for b in blocks)
        self.block_of: dict[Obj, int] = {}
        for k, block in enumerate(self.blocks):
            if not block:
                raise MalformedCongruence("empty object block")
            for x in block:
                if x in self.block_of:
                    raise MalformedCongruence(f"object {x!r} lies in two blocks")
                self.block_of[x] = k
        self.fl: dict[tuple, frozenset] = {}
        for key, pairs in fl.items():
            key = tuple(key)
            if len(key) != 4:
                raise MalformedCongruence(f"matrix key {key!r} must have four objects")
            pairs = frozenset(tuple(p) for p in pairs)
            if pairs:
                self.fl[key] = self.fl.get(key, frozenset()) | pairs

    def related_objects(self, x: Obj, y: Obj) -> bool:
        return self.block_of[x] == self.block_of[y]

    def block(self, x: Obj) -> tuple[Obj, ...]:
        return self.blocks[self.block_of[x]]

    def relation(self, a, b, a2, b2) -> frozenset:
        return self.fl.get((a, b, a2, b2), frozenset())

    def __eq__(self, other):
        if not isinstance(other, RiguetCongruence):
            return NotImplemented
        return (
            {frozenset(b) for b in self.blocks} == {frozenset(b) for b in other.blocks}
            and self.fl == other.fl
        )

    def validate_against(self, C: FiniteCategory) -> None:
        if set(self.block_of) != set(C.objects):
            raise MalformedCongruence("object blocks do not partition the category's objects")
        for (a, b, a2, b2), pairs in self.fl.items():
            for x in (a, b, a2, b2):
                if x not in self.block_of:
                    raise MalformedCongruence(f"matrix mentions unknown object {x!r}")
            if not (self.related_objects(a, a2) and self.related_objects(b, b2)):
                raise MalformedCongruence(f"matrix {(a, b, a2, b2)!r} has unrelated rows")
            left, right = set(C.hom(a, b)), set(C.hom(a2, b2))
            for f, f2 in pairs:
                if f not in left or f2 not in right:
                    raise MalformedCongruence(
                        f"pair ({f!r}, {f2!r}) does not lie in Hom({a!r},{b!r}) x Hom({a2!r},{b2!r})"
                    )


@dataclass
class ConditionResult:
    number: int
    passed: bool
    witness: dict | None = None

    @property
    def name(self) -> str:
        return CONDITION_NAMES[self.number]

    def to_json(self) -> dict:
        return {
            "condition": self.number,
            "name": self.name,
            "status": "PASS" if self.passed else "FAIL",
            "witness": self.witness,
        }


@dataclass
class AxiomReport:
    conditions: list[ConditionResult] = field(default_factory=list)

    @property
    def all_passed(self) -> bool:
        return all(c.passed for c in self.conditions)

    def failed(self) -> list[int]:
        return [c.number for c in self.conditions if not c.passed]

    def condition(self, number: int) -> ConditionResult:
        return self.conditions[number - 1]

    def to_json(self) -> dict:
        return {
            "all_pass": self.all_passed,
            "conditions": [c.to_json() for c in self.conditions],
        }

    def render(self) -> str:
        lines = [f"{'#':<3}{'condition':<24}{'status':<8}witness"]
        for c in self.conditions:
            lines.append(
                f"{c.number:<3}{c.name:<24}{'PASS' if c.passed else 'FAIL':<8}"
                f"{'' if c.witness is None else c.witness}"
            )
        return "\n".join(lines)


def _adjacency(phi: RiguetCongruence, C: FiniteCategory) -> dict[tuple, dict[Mor, list[Mor]]]:
    adj: dict[tuple, dict[Mor, list[Mor]]] = {}
    for key, pairs in phi.fl.items():
        d: dict[Mor, list[Mor]] = {}
        for f, f2 in pairs:
            d.setdefault(f, []).append(f2)
        for lst in d.values():
            lst.sort(key=C.order.__getitem__)
        adj[key] = d
    return adj


def _sorted_pairs(pairs, C: FiniteCategory):
    return sorted(pairs, key=lambda p: (C.order[p[0]], C.order[p[1]]))


def _witness(matrix, **kw):
    out = {"matrix": list(matrix)}
    out.update({k: list(v) if isinstance(v, tuple) else v for k, v in kw.items()})
    return out


def _check_diagonal(C, phi):
    for a in C.objects:
        for b in C.objects:
            rel = phi.relation(a, b, a, b)
            for f in C.hom(a, b):
                if (f, f) not in rel:
                    return _witness((a, b, a, b), missing=(f, f))
    return None


def _matrices(C, phi):
    """All matrices ``(a, b, a2, b2)`` with related rows, in stable order."""
    for a in C.objects:
        for b in C.objects:
            for a2 in phi.block(a):
                for b2 in phi.block(b):
                    yield a, b, a2, b2


def _ordered_block(C, phi, x):
    pos = {o: k for k, o in enumerate(C.objects)}
    return sorted(phi.block(x), key=pos.__getitem__)


def _check_symmetry(C, phi):
    for a, b, a2, b2 in _matrices(C, phi):
        converse = phi.relation(a2, b2, a, b)
        for f, f2 in _sorted_pairs(phi.relation(a, b, a2, b2), C):
            if (f2, f) not in converse:
                return _witness((a, b, a2, b2), pair=(f, f2), missing=(f2, f))
    return None


def _check_vertical(C, phi, adj):
    for a in C.objects:
        row_a = _ordered_block(C, phi, a)
        for b in C.objects:
            row_b = _ordered_block(C, phi, b)
            for a1, b1, a2, b2 in product(row_a, row_b, row_a, row_b):
                first = adj.get((a, b, a1, b1))
                second = adj.get((a1, b1, a2, b2))
                if not first or not second:
                    continue
                target = phi.relation(a, b, a2, b2)
                for f in sorted(first, key=C.order.__getitem__):
                    for f1 in first[f]:
                        for f2 in second.get(f1, ()):
                            if (f, f2) not in target:
                                return {
                                    "matrices": [[a, b, a1, b1], [a1, b1, a2, b2]],
                                    "pairs": [[f, f1], [f1, f2]],
                                    "missing": [f, f2],
                                }
    return None


def _check_horizontal(C, phi, adj):
    for a in C.objects:
        row_a = _ordered_block(C, phi, a)
        for b in C.objects:
            row_b = _ordered_block(C, phi, b)
            for c in C.objects:
                row_c = _ordered_block(C, phi, c)
                for a2, b2, c2 in product(row_a, row_b, row_c):
                    left = adj.get((a, b, a2, b2))
                    right = adj.get((b, c, b2, c2))
                    if not left or not right:
                        continue
                    target = phi.relation(a, c, a2, c2)
                    for f in sorted(left, key=C.order.__getitem__):
                        for f2 in left[f]:
                            for g in sorted(right, key=C.order.__getitem__):
                                gf = C.compose_table[(g, f)]
                                for g2 in right[g]:
                                    g2f2 = C.compose_table[(g2, f2)]
                                    if (gf, g2f2) not in target:
                                        return {
                                            "matrices": [[a, b, a2, b2], [b, c, b2, c2]],
                                            "pairs": [[f, f2], [g, g2]],
                                            "missing": [gf, g2f2],
                                        }
    return None


def _check_lifting(C, phi, adj):
    for a, b, a2, b2 in _matrices(C, phi):
        rel = adj.get((a, b, a2, b2), {})
        for f in C.hom(a, b):
            if f not in rel:
                return _witness((a, b, a2, b2), unlifted=f)
    return None


def check_riguet_axioms(C: FiniteCategory, phi: RiguetCongruence) -> AxiomReport:
    """Check all five conditions; each failing one carries its first counterexample."""
    phi.validate_against(C)
    adj = _adjacency(phi, C)
    witnesses = [
        _check_diagonal(C, phi),
        _check_symmetry(C, phi),
        _check_vertical(C, phi, adj),
        _check_horizontal(C, phi, adj),
        _check_lifting(C, phi, adj),
    ]
    return AxiomReport([ConditionResult(k + 1, w is None, w) for k, w in enumerate(witnesses)])


@dataclass(frozen=True)
class MorphClass:
    """The members ``(a2, b2, f2)`` related to a morphism across all equivalent endpoints."""

    members: frozenset

    def morphisms(self) -> frozenset:
        return frozenset(m for _, _, m in self.members)

    def __contains__(self, f) -> bool:
        return any(m == f for _, _, m in self.members)

    def __len__(self):
        return len(self.members)


def morph_class(C: FiniteCategory, phi: RiguetCongruence, f: Mor) -> MorphClass:
    a, b = C.dom[f], C.cod[f]
    members = set()
    for a2 in phi.block(a):
        for b2 in phi.block(b):
            for g, g2 in phi.relation(a, b, a2, b2):
                if g == f:
                    members.add((a2, b2, g2))
    return MorphClass(frozenset(members))


def classes_equal(C: FiniteCategory, phi: RiguetCongruence, f: Mor, g: Mor) -> bool:
    return morph_class(C, phi, f).morphisms() == morph_class(C, phi, g).morphisms()


@dataclass
class QuotientCategory:
    category: FiniteCategory
    obj_map: dict
    mor_map: dict
    classes: dict

    def projection(self) -> "Functor":
        return Functor(dict(self.obj_map), dict(self.mor_map))


@dataclass
class Functor:
    obj_map: dict
    mor_map: dict


def _class_id(C, members) -> str:
    return "[" + str(min(members, key=C.order.__getitem__)) + "]"


def quotient(C: FiniteCategory, phi: RiguetCongruence, report: AxiomReport | None = None) -> QuotientCategory:
    report = report or check_riguet_axioms(C, phi)
    if not report.all_passed:
        raise AxiomsNotVerified(report)
    pos = {o: k for k, o in enumerate(C.objects)}
    block_ids = {}
    obj_map = {}
    q_objects = []
    for block in sorted(phi.blocks, key=lambda bl: min(pos[x] for x in bl)):
        rep = min(block, key=pos.__getitem__)
        bid = "[" + str(rep) + "]"
        q_objects.append(bid)
        for x in block:
            obj_map[x] = bid
        block_ids[phi.block_of[rep]] = bid

    mor_map = {}
    classes = {}
    for f in C.morphisms:
        if f in mor_map:
            continue
        members = morph_class(C, phi, f).morphisms()
        cid = _class_id(C, members)
        classes[cid] = MorphClass(morph_class(C, phi, f).members)
        for m in members:
            mor_map[m] = cid

    homs: dict[tuple, list] = {}
    dom_rep = {}
    for f in C.morphisms:
        cid = mor_map[f]
        key = (obj_map[C.dom[f]], obj_map[C.cod[f]])
        lst = homs.setdefault(key, [])
        if cid not in lst:
            lst.append(cid)
        dom_rep.setdefault(cid, f)

    # a member of each class starting at each object of its domain block
    starting_at: dict[tuple, Mor] = {}
    for f in C.morphisms:
        starting_at.setdefault((mor_map[f], C.dom[f]), f)

    compose_table = {}
    for (x, y), fs in homs.items():
        for (y2, z), gs in homs.items():
            if y2 != y:
                continue
            for F in fs:
                f = dom_rep[F]
                for G in gs:
                    g = starting_at.get((G, C.cod[f]))
                    if g is None:
                        raise AxiomsNotVerified(report)
                    compose_table[(G, F)] = mor_map[C.compose(g, f)]
    identities = {obj_map[x]: mor_map[C.identities[x]] for x in C.objects}
    labels = {}
    for x in C.objects:
        labels.setdefault(obj_map[x], "[" + C.label(x) + "]")
    for cid in classes:
        labels[cid] = "[" + C.label(dom_rep[cid]) + "]"
    Q = FiniteCategory(q_objects, homs, compose_table, identities, labels=labels)
    return QuotientCategory(Q, obj_map, mor_map, classes)


def projection(C: FiniteCategory, phi: RiguetCongruence, Q: QuotientCategory | None = None) -> Functor:
    Q = Q or quotient(C, phi)
    return Q.projection()


def functor_violation(C: FiniteCategory, D: FiniteCategory, F: Functor):
    """First failure of typing, identity or composition preservation, or ``None``."""
    for f in C.morphisms:
        Ff = F.mor_map[f]
        if D.dom[Ff] != F.obj_map[C.dom[f]] or D.cod[Ff] != F.obj_map[C.cod[f]]:
            return ("typing", f)
    for x in C.objects:
        if F.mor_map[C.identities[x]] != D.identities[F.obj_map[x]]:
            return ("identity", x)
    for (g, f), gf in C.compose_table.items():
        if F.mor_map[gf] != D.compose(F.mor_map[g], F.mor_map[f]):
            return ("composition", g, f)
    return None


def is_full_on_homs(C: FiniteCategory, D: FiniteCategory, F: Functor) -> bool:
    """Every ``D``-morphism between images of objects has a preimage."""
    images = {}
    for f in C.morphisms:
        images.setdefault((C.dom[f], C.cod[f]), set()).add(F.mor_map[f])
    for x in C.objects:
        for y in C.objects:
            if set(D.hom(F.obj_map[x], F.obj_map[y])) != images.get((x, y), set()):
                return False
    return True


def diagonal_congruence(C: FiniteCategory) -> RiguetCongruence:
    fl = {}
    for (a, b), ms in C.homs.items():
        if ms:
            fl[(a, b, a, b)] = [(f, f) for f in ms]
    return RiguetCongruence([[x] for x in C.objects], fl)


def from_strong_congruence(C: FiniteCategory, rel: Mapping[tuple[Obj, Obj], Iterable[Iterable[Mor]]]) -> RiguetCongruence:
    """Embed a congruence on parallel morphisms, given per hom as a partition.

    Homs absent from ``rel`` are partitioned discretely.
    """
    cls: dict[Mor, int] = {}
    n = 0
    for (x, y), blocks in rel.items():
        hom = set(C.hom(x, y))
        seen = set()
        for block in blocks:
            block = list(block)
            for f in block:
                if f not in hom or f in seen:
                    raise NotACongruence(f"{f!r} is misplaced in the partition of Hom({x!r},{y!r})")
                seen.add(f)
                cls[f] = n
            n += 1
        if seen != hom:
            raise NotACongruence(f"partition of Hom({x!r},{y!r}) is not exhaustive")
    for f in C.morphisms:
        if f not in cls:
            cls[f] = n
            n += 1
    by_hom: dict[tuple, list] = {}
    for f in C.morphisms:
        by_hom.setdefault((C.dom[f], C.cod[f]), []).append(f)
    for (x, y), fs in by_hom.items():
        for z in C.objects:
            gs = C.hom(y, z)
            for f, f2 in product(fs, fs):
                if cls[f] != cls[f2]:
                    continue
                for g, g2 in product(gs, gs):
                    if cls[g] == cls[g2] and cls[C.compose(g, f)] != cls[C.compose(g2, f2)]:
                        raise NotACongruence(f"({g!r} o {f!r}, {g2!r} o {f2!r}) breaks compatibility")
    fl = {}
    for (x, y), fs in by_hom.items():
        fl[(x, y, x, y)] = [(f, f2) for f in fs for f2 in fs if cls[f] == cls[f2]]
    return RiguetCongruence([[x] for x in C.objects], fl)


def intersect(phi1: RiguetCongruence, phi2: RiguetCongruence) -> RiguetCongruence:
    """Blockwise meet of the object partitions and pairwise meet of the relations.

    The result is not re-verified here; run :func:`check_riguet_axioms` on it.
    """
    if set(phi1.block_of) != set(phi2.block_of):
        raise MalformedCongruence("congruences live on different object sets")
    meet: dict[tuple[int, int], list] = {}
    for x in phi1.block_of:
        meet.setdefault((phi1.block_of[x], phi2.block_of[x]), []).append(x)
    order = {x: k for k, block in enumerate(phi1.blocks) for x in block}
    blocks = [sorted(b, key=order.__getitem__) for b in meet.values()]
    fl = {}
    for key, pairs in phi1.fl.items():
        other = phi2.fl.get(key)
        if other:
            common = pairs & other
            if common:
                fl[key] = common
    return RiguetCongruence(blocks, fl)


def find_nontrivial_iso(C: FiniteCategory):
    """``(x, y, f, g)`` with ``x != y`` and ``f: x -> y`` inverse to ``g``, or ``None``."""
    for i, x in enumerate(C.objects):
        for y in C.objects[i + 1 :]:
            back = C.hom(y, x)
            if not back:
                continue
            for f in C.hom(x, y):
                for g in back:
                    if C.compose(g, f) == C.identities[x] and C.compose(f, g) == C.identities[y]:
                        return x, y, f, g
    return None


def is_skeletal(C: FiniteCategory) -> bool:
    return find_nontrivial_iso(C) is None


def to_dot(C: FiniteCategory, morphisms: Iterable[Mor] | None = None, name: str = "C") -> str:
    """DOT digraph; by default every non-identity morphism becomes an edge."""
    if len(C.objects) > MAX_DOT_OBJECTS:
        raise TooLarge(f"{len(C.objects)} objects exceed the DOT limit of {MAX_DOT_OBJECTS}")
    ids = set(C.identities.values())
    if morphisms is None:
        morphisms = [m for m in C.morphisms if m not in ids]
    node = {x: f"n{k}" for k, x in enumerate(C.objects)}
    lines = [f"digraph {name} {{"]
    for x in C.objects:
        lines.append(f'  {node[x]} [label="{_dot_escape(C.label(x))}"];')
    for m in sorted(morphisms, key=C.order.__getitem__):
        lines.append(
            f'  {node[C.dom[m]]} -> {node[C.cod[m]]} [label="{_dot_escape(C.label(m))}"];'
        )
    lines.append("}")
    return "\n".join(lines) + "\n"


def _dot_escape(s: str) -> str:
    return s.replace("\\", "\\\\").replace('"', '\\"')
