"""JSON and DOT renderings of spectra, E-lattice descriptors and groups.

Every natural is written as a decimal string; JSON keys are sorted.
"""

from typing import Any, Dict, List, Optional

import orjson

from orderlattice.group.model import AbelianGroup, OrderSpectrum
from orderlattice.group.reconstruct import SpectrumCandidate
from orderlattice.lattice.elattice import AxiomReport, ELatticeDescriptor, IsoResult
from orderlattice.util import decimal, decimals, orjson_dump, parse_natural


def spectrum_to_dict(spec: OrderSpectrum) -> Dict[str, Any]:
    return {
        "group": spec.group.spec if spec.group is not None else None,
        "exponent": decimal(spec.exponent),
        "entries": [
            {"order": decimal(order), "count": decimal(count)} for order, count in spec
        ],
    }


def spectrum_to_json(spec: OrderSpectrum) -> str:
    return orjson_dump(spectrum_to_dict(spec))


def candidate_from_json(text: str) -> SpectrumCandidate:
    """Reads the OrderSpectrum JSON document; `group` and `exponent` are ignored."""

    try:
        document = orjson.loads(text)
    except orjson.JSONDecodeError as e:
        raise ValueError(f"[candidate_from_json] invalid JSON: {e}")

    if not isinstance(document, dict) or not isinstance(document.get("entries"), list):
        raise ValueError(
            '[candidate_from_json] expected an object with an "entries" list'
        )

    entries: Dict[int, int] = {}

    for ix, entry in enumerate(document["entries"]):
        if not isinstance(entry, dict) or not {"order", "count"} <= set(entry):
            raise ValueError(
                f'[candidate_from_json] entry {ix} needs "order" and "count"'
            )
        order = parse_natural(entry["order"], what=f"entries[{ix}].order")

        if order in entries:
            raise ValueError(f"[candidate_from_json] order {order} listed twice")
        entries[order] = parse_natural(entry["count"], what=f"entries[{ix}].count")

    return SpectrumCandidate(entries)


def group_to_dict(group: AbelianGroup) -> Dict[str, Any]:
    return {
        "group": group.spec,
        "invariant_factors": list(decimals(group.invariant_factors)),
        "components": [
            {"prime": decimal(c.prime), "partition": list(decimals(c.partition))}
            for c in group.components
        ],
        "order": decimal(group.order),
        "exponent": decimal(group.exponent),
    }


def descriptor_to_dict(d: ELatticeDescriptor) -> Dict[str, Any]:
    return {
        "exponent": decimal(d.exponent),
        "nodes": [
            {"order": decimal(order), "count": decimal(d.class_size[order])}
            for order in d.fix_lattice.values
        ],
        "edges": [[decimal(a), decimal(b)] for a, b in d.fix_lattice.covers()],
    }


def descriptor_to_dot(d: ELatticeDescriptor, name: str = "elattice") -> str:
    """Hasse diagram of the fixed points, labelled `order (count)`."""
    result = [f"digraph {name} {{", "    rankdir=BT;"]

    for order in d.fix_lattice.values:
        result.append(f'    "{order}" [label="{order} ({d.class_size[order]})"];')

    for a, b in d.fix_lattice.covers():
        result.append(f'    "{a}" -> "{b}";')

    result.append("}")

    return "\n".join(result)


def iso_to_dict(
    left: AbelianGroup, right: AbelianGroup, result: IsoResult
) -> Dict[str, Any]:
    witness: Optional[List[List[str]]] = None

    if result.witness is not None:
        witness = [[decimal(p), decimal(q)] for p, q in sorted(result.witness.items())]

    return {
        "left": left.spec,
        "right": right.spec,
        "decision": result.decision.value,
        "witness": witness,
    }


def report_to_dict(group: AbelianGroup, report: AxiomReport) -> Dict[str, Any]:
    return {
        "group": group.spec,
        "elements": decimal(report.n_elements),
        "passed": report.passed,
        "checks": [
            {
                "name": check.name,
                "status": check.status.value,
                "witness": (
                    [list(decimals(x)) for x in check.witness]
                    if check.witness is not None
                    else None
                ),
                "detail": check.detail,
            }
            for check in report.checks
        ],
    }
