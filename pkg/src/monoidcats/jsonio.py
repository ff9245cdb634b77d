"""JSON encodings for every value type, and decoders for the ones the CLI reads."""

from __future__ import annotations

import json
from typing import Any

from monoidcats.cat_c import CMorphism, check_morphism
from monoidcats.errors import MalformedCategory, MalformedCongruence, MalformedElement
from monoidcats.msets import Atom, Element, SortedMapping, SortedSet, Tagged, element_key
from monoidcats.perm import Permutation
from monoidcats.quotient_q import QMorphism, QObject
from monoidcats.riguet import FiniteCategory, RiguetCongruence
from monoidcats.words import Alphabet, ParikhVector, Word, parse_word, word_from_letters


def alphabet_to_json(alphabet: Alphabet) -> dict:
    return {"letters": list(alphabet.letters)}


def alphabet_from_json(data: Any) -> Alphabet:
    if isinstance(data, dict):
        data = data.get("letters")
    if not isinstance(data, list):
        raise MalformedElement("alphabet must be a list of letters or {\"letters\": [...]}")
    return Alphabet(data)


def word_to_json(w: Word, with_alphabet: bool = True) -> dict:
    entries = w.text() if w.alphabet.compact else list(w.letters())
    out = {"entries": entries}
    if with_alphabet:
        out = {"alphabet": alphabet_to_json(w.alphabet), **out}
    return out


def word_from_json(data: dict, alphabet: Alphabet | None = None) -> Word:
    if "alphabet" in data:
        alphabet = alphabet_from_json(data["alphabet"])
    if alphabet is None:
        raise MalformedElement("word has no alphabet")
    entries = data.get("entries")
    if isinstance(entries, str):
        return parse_word(alphabet, entries)
    if isinstance(entries, list):
        return word_from_letters(alphabet, entries)
    raise MalformedElement("word entries must be a string or a list of letters")


def parikh_to_json(p: ParikhVector) -> dict:
    return {"counts": p.as_dict()}


def perm_to_json(s: Permutation) -> dict:
    return {"size": s.size, "map": list(s.map), "cycles": s.cycle_string()}


def cmorphism_to_json(phi: CMorphism) -> dict:
    return {
        "alphabet": alphabet_to_json(phi.dom.alphabet),
        "dom": word_to_json(phi.dom, with_alphabet=False)["entries"],
        "cod": word_to_json(phi.cod, with_alphabet=False)["entries"],
        "map": list(phi.map),
    }


def cmorphism_from_json(data: dict) -> CMorphism:
    alphabet = alphabet_from_json(data["alphabet"])
    a = word_from_json({"entries": data["dom"]}, alphabet)
    b = word_from_json({"entries": data["cod"]}, alphabet)
    return check_morphism(a, b, data["map"])


def element_to_json(e: Element):
    if isinstance(e, Atom):
        return e.n
    return {"x": element_to_json(e.inner), "tag": e.tag}


def element_from_json(data) -> Element:
    if isinstance(data, int) and not isinstance(data, bool):
        return Atom(data)
    if isinstance(data, dict) and set(data) == {"x", "tag"}:
        return Tagged(element_from_json(data["x"]), data["tag"])
    raise MalformedElement(f"cannot read element {data!r}")


def sorted_set_to_json(X: SortedSet) -> dict:
    return {
        "alphabet": alphabet_to_json(X.alphabet),
        "parts": {x: [element_to_json(e) for e in sorted(p, key=element_key)] for x, p in X.items()},
    }


def sorted_set_from_json(data: dict) -> SortedSet:
    alphabet = alphabet_from_json(data["alphabet"])
    return SortedSet(alphabet, {x: [element_from_json(e) for e in es] for x, es in data["parts"].items()})


def sorted_mapping_to_json(h: SortedMapping) -> dict:
    comps = {}
    for x, comp in zip(h.dom.alphabet.letters, h.components):
        comps[x] = [
            [element_to_json(e), element_to_json(comp[e])] for e in sorted(comp, key=element_key)
        ]
    return {"dom": sorted_set_to_json(h.dom), "cod": sorted_set_to_json(h.cod), "components": comps}


def sorted_mapping_from_json(data: dict) -> SortedMapping:
    dom = sorted_set_from_json(data["dom"])
    cod = sorted_set_from_json(data["cod"])
    comps = {
        x: {element_from_json(e): element_from_json(img) for e, img in pairs}
        for x, pairs in data["components"].items()
    }
    return SortedMapping(dom, cod, comps)


def qobject_to_json(o: QObject) -> dict:
    return {"class_of": str(o.representative), "canonical": str(o.canonical)}


def qmorphism_to_json(m: QMorphism) -> dict:
    return {"dom": qobject_to_json(m.dom), "cod": qobject_to_json(m.cod), "rep": cmorphism_to_json(m.rep)}


def category_to_json(C: FiniteCategory) -> dict:
    homs = {}
    for x in C.objects:
        for y in C.objects:
            ms = C.hom(x, y)
            if ms:
                homs[f"{x}->{y}"] = list(ms)
    compose = [[g, f, h] for (g, f), h in sorted(
        C.compose_table.items(), key=lambda kv: (C.order[kv[0][1]], C.order[kv[0][0]])
    )]
    out = {
        "objects": list(C.objects),
        "homs": homs,
        "compose": compose,
        "ids": {x: C.identities[x] for x in C.objects},
    }
    labels = {k: v for k, v in C.labels.items() if v != str(k)}
    if labels:
        out["labels"] = labels
    return out


def category_from_json(data: Any) -> FiniteCategory:
    if not isinstance(data, dict):
        raise MalformedCategory("category JSON must be an object")
    try:
        objects = data.get("objects", [])
        homs = {}
        for key, ms in data.get("homs", {}).items():
            if "->" not in key:
                raise MalformedCategory(f"hom key {key!r} is not of the form 'x->y'")
            x, y = key.split("->", 1)
            homs[(x, y)] = list(ms)
        table = {}
        for entry in data.get("compose", []):
            g, f, h = entry
            table[(g, f)] = h
        return FiniteCategory(objects, homs, table, data.get("ids", {}), labels=data.get("labels"))
    except (TypeError, ValueError) as exc:
        if isinstance(exc, MalformedCategory):
            raise
        raise MalformedCategory(str(exc)) from None


def congruence_to_json(phi: RiguetCongruence, C: FiniteCategory | None = None) -> dict:
    if C is not None:
        pos = {x: k for k, x in enumerate(C.objects)}
        okey = pos.__getitem__
        mkey = C.order.__getitem__
    else:
        okey = mkey = str
    fl = []
    for key in sorted(phi.fl, key=lambda k: tuple(okey(x) for x in k)):
        pairs = sorted(phi.fl[key], key=lambda p: (mkey(p[0]), mkey(p[1])))
        fl.append({"matrix": list(key), "pairs": [list(p) for p in pairs]})
    blocks = [sorted(b, key=okey) for b in phi.blocks]
    blocks.sort(key=lambda b: okey(b[0]))
    return {"obj_blocks": blocks, "fl": fl}


def congruence_from_json(data: Any) -> RiguetCongruence:
    if not isinstance(data, dict) or "obj_blocks" not in data:
        raise MalformedCongruence("congruence JSON needs obj_blocks")
    try:
        fl = {}
        for entry in data.get("fl", []):
            key = tuple(entry["matrix"])
            fl.setdefault(key, []).extend(tuple(p) for p in entry["pairs"])
        return RiguetCongruence(data["obj_blocks"], fl)
    except (TypeError, KeyError, ValueError) as exc:
        if isinstance(exc, MalformedCongruence):
            raise
        raise MalformedCongruence(str(exc)) from None


def dumps(data) -> str:
    return json.dumps(data, ensure_ascii=False, sort_keys=False)
