"""Instance and certificate files.

Instances and certificates are JSON.  Serialization is canonical: dictionary
keys are sorted, sets appear as id-sorted lists, and covers list their chains
by smallest element, so identical inputs always produce identical bytes and
certificates stay diffable.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Any, Iterable

from . import oracle
from .core import (
    ElementId,
    FinitePoset,
    build_poset,
    id_key,
    is_antichain,
    is_chain,
    member_key,
    sorted_ids,
    verify_antichain_cover,
    verify_chain_cover,
)
from .dilworth import DilworthCertificate, DilworthReport, check_dilworth
from .erdos_szekeres import (
    DECREASING,
    INCREASING,
    IntSeq,
    SubseqWitness,
    seq_from_list,
    verify_subseq,
)
from .errors import ParseError, PosetKitError, ValidationError
from .hall import (
    BipartiteGraph,
    Matching,
    Violation,
    build_bigraph,
    neighborhood,
    verify_matching,
)
from .mirsky import MirskyCertificate, MirskyReport, check_mirsky
from .oracle import DEFAULT_ORACLE_CAP, SizedWitness

POSET = "poset"
BIGRAPH = "bigraph"
FAMILY = "family"
SEQUENCE = "sequence"
INSTANCE_KINDS = (POSET, BIGRAPH, FAMILY, SEQUENCE)

TIE_BREAK = "lexicographic-id"


@dataclass(frozen=True)
class Instance:
    """A parsed, validated input: ``data`` is the domain object for ``kind``."""

    kind: str
    data: Any


def _reject_duplicate_keys(pairs: list[tuple[str, Any]]) -> dict[str, Any]:
    out: dict[str, Any] = {}
    for key, value in pairs:
        if key in out:
            raise ValidationError(f"duplicate key {key!r} in object")
        out[key] = value
    return out


def _load_json(data: bytes | str) -> Any:
    if isinstance(data, bytes):
        try:
            data = data.decode("utf-8")
        except UnicodeDecodeError as e:
            raise ParseError(f"input is not UTF-8: {e}") from None
    try:
        return json.loads(data, object_pairs_hook=_reject_duplicate_keys)
    except json.JSONDecodeError as e:
        raise ParseError(f"input is not valid JSON: {e}") from None


def _id_entry(x: Any, where: str) -> ElementId:
    if isinstance(x, bool) or not isinstance(x, (str, int)):
        raise ValidationError(f"{where}: ids must be strings or integers, got {x!r}")
    return x


def _id_list(value: Any, where: str) -> list[ElementId]:
    if not isinstance(value, list):
        raise ValidationError(f"{where}: expected a list")
    return [_id_entry(x, where) for x in value]


def _pair_list(value: Any, where: str) -> list[tuple[ElementId, ElementId]]:
    if not isinstance(value, list):
        raise ValidationError(f"{where}: expected a list of pairs")
    pairs = []
    for i, entry in enumerate(value):
        if not isinstance(entry, list) or len(entry) != 2:
            raise ValidationError(f"{where}[{i}]: expected a [from, to] pair")
        pairs.append((_id_entry(entry[0], f"{where}[{i}]"), _id_entry(entry[1], f"{where}[{i}]")))
    return pairs


def _field(body: dict[str, Any], name: str) -> Any:
    if name not in body:
        raise ValidationError(f"missing field {name!r}")
    return body[name]


def parse_instance(data: bytes | str) -> Instance:
    """Parse and validate an instance file; diagnostics name the first
    violated invariant."""
    body = _load_json(data)
    if not isinstance(body, dict):
        raise ValidationError("instance must be a JSON object")
    kind = _field(body, "kind")
    if kind not in INSTANCE_KINDS:
        raise ValidationError(f"unknown instance kind {kind!r}")

    if kind == POSET:
        elements = _id_list(_field(body, "elements"), "elements")
        edges = _pair_list(_field(body, "edges"), "edges")
        try:
            return Instance(POSET, build_poset(elements, edges))
        except ValidationError:
            raise
        except PosetKitError as e:
            raise ValidationError(str(e)) from None

    if kind == BIGRAPH:
        left = _id_list(_field(body, "left"), "left")
        right = _id_list(_field(body, "right"), "right")
        edges = _pair_list(_field(body, "edges"), "edges")
        return Instance(BIGRAPH, build_bigraph(left, right, edges))

    if kind == FAMILY:
        members = _field(body, "members")
        if not isinstance(members, dict):
            raise ValidationError("members: expected an object of name -> id list")
        family: dict[ElementId, frozenset[ElementId]] = {}
        for name, values in members.items():
            ids = _id_list(values, f"members[{name!r}]")
            if len(set(ids)) != len(ids):
                raise ValidationError(f"members[{name!r}]: duplicate id in member")
            family[name] = frozenset(ids)
        return Instance(FAMILY, family)

    values = _field(body, "values")
    if not isinstance(values, list):
        raise ValidationError("values: expected a list of integers")
    try:
        return Instance(SEQUENCE, seq_from_list(values))
    except ValidationError:
        raise
    except PosetKitError as e:
        raise ValidationError(f"values: {e}") from None


def canonical_json(obj: Any) -> str:
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"


def _ids_out(s: Iterable[ElementId]) -> list[ElementId]:
    return list(sorted_ids(s))


def _cover_out(cover: Iterable[frozenset[ElementId]], keep_order: bool = False) -> list[list[ElementId]]:
    members = list(cover) if keep_order else sorted(cover, key=member_key)
    return [_ids_out(m) for m in members]


def _pairs_out(pairs: Iterable[tuple[ElementId, ElementId]]) -> list[list[ElementId]]:
    return [list(p) for p in sorted(pairs, key=lambda p: (id_key(p[0]), id_key(p[1])))]


def _violation_out(v: Violation) -> dict[str, Any]:
    return {"set": _ids_out(v.members), "deficiency": v.deficiency}


def size_certificate(kind: str, found: SizedWitness) -> dict[str, Any]:
    return {
        "kind": kind,
        "size": found.size,
        "witness": _ids_out(found.witness),
        "meta": {"algorithm": "exhaustive-search", "tie_break": TIE_BREAK},
    }


def chain_cover_certificate(cert: DilworthCertificate) -> dict[str, Any]:
    return {
        "kind": "chain-cover",
        "width": cert.width,
        "antichain": _ids_out(cert.antichain_witness),
        "cover": _cover_out(cert.cover),
        "meta": {"algorithm": "perles-recursion", "tie_break": TIE_BREAK},
    }


def antichain_cover_certificate(cert: MirskyCertificate) -> dict[str, Any]:
    return {
        "kind": "antichain-cover",
        "height": cert.height,
        "chain": _ids_out(cert.chain_witness),
        "layers": _cover_out(cert.layers, keep_order=True),
        "meta": {"algorithm": "maximal-layer-peel", "tie_break": TIE_BREAK},
    }


def report_certificate(report: DilworthReport | MirskyReport) -> dict[str, Any]:
    if isinstance(report, DilworthReport):
        return {
            "kind": "dilworth-report",
            "width": report.width,
            "cover_size": report.cover_size,
            "equal": report.equal,
        }
    return {
        "kind": "mirsky-report",
        "height": report.height,
        "cover_size": report.cover_size,
        "equal": report.equal,
    }


def matching_certificate(result: Matching | Violation, minimality_checked: bool) -> dict[str, Any]:
    meta = {
        "algorithm": "chain-cover-matching",
        "tie_break": TIE_BREAK,
        "minimality_check": "checked" if minimality_checked else "trusted",
    }
    if isinstance(result, Violation):
        return {"kind": "matching", "violation": _violation_out(result), "meta": meta}
    return {"kind": "matching", "pairs": _pairs_out(result), "meta": meta}


def sdr_certificate(result: dict[ElementId, ElementId] | Violation, minimality_checked: bool) -> dict[str, Any]:
    meta = {
        "algorithm": "chain-cover-matching",
        "tie_break": TIE_BREAK,
        "minimality_check": "checked" if minimality_checked else "trusted",
    }
    if isinstance(result, Violation):
        return {"kind": "sdr", "violation": _violation_out(result), "meta": meta}
    return {"kind": "sdr", "choice": {str(k): result[k] for k in result}, "meta": meta}


def subsequence_certificate(w: SubseqWitness, m: int, n: int) -> dict[str, Any]:
    return {
        "kind": "subsequence",
        "direction": w.kind,
        "values": list(w.subsequence.items),
        "m": m,
        "n": n,
        "meta": {"algorithm": "poset-reduction", "tie_break": TIE_BREAK},
    }


def parse_certificate(data: bytes | str) -> dict[str, Any]:
    body = _load_json(data)
    if not isinstance(body, dict):
        raise ValidationError("certificate must be a JSON object")
    _field(body, "kind")
    return body


def _require_kind(inst: Instance, kind: str, cert_kind: str) -> Any:
    if inst.kind != kind:
        raise ValidationError(
            f"certificate kind {cert_kind!r} needs a {kind!r} instance, got {inst.kind!r}"
        )
    return inst.data


def verify_certificate(
    inst: Instance,
    cert: dict[str, Any],
    *,
    oracle_cap: int = DEFAULT_ORACLE_CAP,
) -> tuple[bool, str]:
    """Re-check a certificate against its instance.

    Size pairs (a witness plus a cover of equal cardinality) are conclusive by
    counting; bare width/height claims are re-derived through the oracle."""
    kind = cert["kind"]

    if kind in ("width", "height"):
        P: FinitePoset = _require_kind(inst, POSET, kind)
        witness = frozenset(_id_list(_field(cert, "witness"), "witness"))
        size = _field(cert, "size")
        predicate = is_antichain if kind == "width" else is_chain
        search = oracle.max_antichain if kind == "width" else oracle.max_chain
        if not predicate(P, witness):
            return False, f"witness is not a valid {kind} witness"
        if len(witness) != size:
            return False, "claimed size does not match the witness"
        if search(P, oracle_cap).size != size:
            return False, f"poset {kind} differs from the claimed size"
        return True, "ok"

    if kind == "chain-cover":
        P = _require_kind(inst, POSET, kind)
        w = _field(cert, "width")
        antichain = frozenset(_id_list(_field(cert, "antichain"), "antichain"))
        cover = [frozenset(_id_list(c, "cover")) for c in _field(cert, "cover")]
        if not is_antichain(P, antichain) or len(antichain) != w:
            return False, "antichain witness invalid or of the wrong size"
        if not verify_chain_cover(P, cover):
            return False, "cover is not a chain cover"
        if len(cover) != w:
            return False, "cover size does not match the claimed width"
        return True, "ok"

    if kind == "antichain-cover":
        P = _require_kind(inst, POSET, kind)
        h = _field(cert, "height")
        chain = frozenset(_id_list(_field(cert, "chain"), "chain"))
        layers = [frozenset(_id_list(c, "layers")) for c in _field(cert, "layers")]
        if not is_chain(P, chain) or len(chain) != h:
            return False, "chain witness invalid or of the wrong size"
        if not verify_antichain_cover(P, layers):
            return False, "layers are not an antichain cover"
        if len(layers) != h:
            return False, "layer count does not match the claimed height"
        return True, "ok"

    if kind == "dilworth-report":
        P = _require_kind(inst, POSET, kind)
        report = check_dilworth(P, oracle_cap)
        expected = report_certificate(report)
        for key in ("width", "cover_size", "equal"):
            if cert.get(key) != expected[key]:
                return False, f"report field {key!r} does not match a recomputation"
        return True, "ok"

    if kind == "mirsky-report":
        P = _require_kind(inst, POSET, kind)
        report = check_mirsky(P, oracle_cap)
        expected = report_certificate(report)
        for key in ("height", "cover_size", "equal"):
            if cert.get(key) != expected[key]:
                return False, f"report field {key!r} does not match a recomputation"
        return True, "ok"

    if kind == "matching":
        G: BipartiteGraph = _require_kind(inst, BIGRAPH, kind)
        if "violation" in cert:
            v = cert["violation"]
            members = frozenset(_id_list(_field(v, "set"), "violation.set"))
            if not members <= G.left_set:
                return False, "violating set is not a set of left vertices"
            lack = len(members) - len(neighborhood(G, members))
            if lack < 1 or lack != _field(v, "deficiency"):
                return False, "violation does not recheck"
            return True, "ok"
        pairs = [(p[0], p[1]) for p in _pair_list(_field(cert, "pairs"), "pairs")]
        if not verify_matching(G, pairs, require_L_perfect=True):
            return False, "pairs are not an L-perfect matching"
        return True, "ok"

    if kind == "sdr":
        family: dict[ElementId, frozenset[ElementId]] = _require_kind(inst, FAMILY, kind)
        if "violation" in cert:
            v = cert["violation"]
            members = _id_list(_field(v, "set"), "violation.set")
            if not set(members) <= set(family):
                return False, "violating subfamily names unknown members"
            union = frozenset().union(*(family[nm] for nm in members)) if members else frozenset()
            lack = len(members) - len(union)
            if lack < 1 or lack != _field(v, "deficiency"):
                return False, "violation does not recheck"
            return True, "ok"
        choice = _field(cert, "choice")
        if not isinstance(choice, dict):
            raise ValidationError("choice: expected an object")
        if set(choice) != {str(nm) for nm in family}:
            return False, "choice does not name every member exactly once"
        picked = []
        for name, value in choice.items():
            if value not in family[name]:
                return False, f"choice for {name!r} is not in the member set"
            picked.append(value)
        if len(set(picked)) != len(picked):
            return False, "representatives are not pairwise distinct"
        return True, "ok"

    if kind == "subsequence":
        parent: IntSeq = _require_kind(inst, SEQUENCE, kind)
        direction = _field(cert, "direction")
        if direction not in (INCREASING, DECREASING):
            raise ValidationError(f"unknown direction {direction!r}")
        values = _field(cert, "values")
        witness = SubseqWitness(direction, seq_from_list(values))
        m, n = _field(cert, "m"), _field(cert, "n")
        promised = m + 1 if direction == INCREASING else n + 1
        if len(witness.subsequence) != promised:
            return False, "witness does not have the promised length"
        if not verify_subseq(parent, witness):
            return False, "witness is not a monotone subsequence of the instance"
        return True, "ok"

    raise ValidationError(f"unknown certificate kind {kind!r}")
