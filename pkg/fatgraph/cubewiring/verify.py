"""Independent checker for wirings."""

from typing import Dict, List, Optional, Tuple

from fatgraph.cubewiring.paths import Point, Wiring

MAX_MESSAGES = 20


def _unit_step(a: Point, b: Point) -> bool:
    return len(a) == len(b) and sum(abs(x - y) for x, y in zip(a, b)) == 1


def verify_wiring(wiring: Wiring, instance=None) -> List[str]:
    """List every violation of the wiring contract; an empty list means valid.

    Checks unit steps, endpoints on the bottom and top layers, containment in
    the declared box, vertex-disjointness, the declared length bound and, with
    an instance, that the wired pairs are exactly the instance's pairs.
    """
    problems: List[str] = []

    def report(message: str) -> None:
        if len(problems) < MAX_MESSAGES:
            problems.append(message)

    if len(wiring.wires) != len(wiring.origins) or len(wiring.wires) != len(wiring.destinations):
        report("Wire, origin and destination counts differ")
        return problems

    owner: Dict[Point, int] = {}
    corner, box = tuple(wiring.corner), tuple(wiring.box)
    for index, (wire, origin, destination) in enumerate(zip(wiring.wires, wiring.origins, wiring.destinations)):
        if not wire:
            report(f"Wire {index} is empty")
            continue
        if wire[0] != tuple(origin) + corner[-1:]:
            report(f"Wire {index} starts at {wire[0]}, expected {tuple(origin) + corner[-1:]}")
        if wire[-1] != tuple(destination) + box[-1:]:
            report(f"Wire {index} ends at {wire[-1]}, expected {tuple(destination) + box[-1:]}")
        for a, b in zip(wire, wire[1:]):
            if not _unit_step(a, b):
                report(f"Wire {index} jumps from {a} to {b}")
                break
        for point in wire:
            if len(point) != len(box) or any(not lo <= x <= hi for lo, x, hi in zip(corner, point, box)):
                report(f"Wire {index} leaves the box at {point}")
                break
        for point in wire:
            other = owner.setdefault(point, index)
            if other != index:
                report(f"Wires {other} and {index} share {point}")
                break
        if wiring.length_bound is not None and len(wire) - 1 > wiring.length_bound:
            report(f"Wire {index} has length {len(wire) - 1} > {wiring.length_bound}")

    if instance is not None:
        wired = sorted((tuple(o), tuple(t)) for o, t in zip(wiring.origins, wiring.destinations))
        expected: List[Tuple[Point, Point]] = sorted(instance.pairs)
        if wired != expected:
            report("Wired pairs differ from the instance's matching")
    return problems


def wiring_summary(wiring: Wiring, instance=None) -> Dict[str, Optional[object]]:
    problems = verify_wiring(wiring, instance)
    return {
        "valid": not problems,
        "violations": problems,
        "wires": len(wiring.wires),
        "height": wiring.height if wiring.wires else 0,
        "max_length": wiring.max_length,
    }
