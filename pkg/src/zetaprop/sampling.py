"""Random small presentations for property tests and stress runs."""

from __future__ import annotations

import random
from typing import Any

from .errors import NotAChainMap, OrientationReversing
from .presentation import MorsePresentation, build_presentation

__all__ = ["SHAPES", "SMALL_SHAPES", "random_presentation", "random_presentations"]

# name -> (index0, index1, index2, boundary keyed by source locus)
SHAPES: dict[str, tuple[list[str], list[str], list[str], dict[str, dict[str, int]]]] = {
    "sphere": (["m"], [], ["M"], {}),
    "sphere_cancel": (["m", "m2"], ["c"], ["M"], {"c": {"m": -1, "m2": 1}}),
    # equator with two vertices and two edges, two hemispheres
    "sphere_ring": (
        ["u", "v"],
        ["e1", "e2"],
        ["w1", "w2"],
        {
            "e1": {"u": -1, "v": 1},
            "e2": {"u": 1, "v": -1},
            "w1": {"e1": 1, "e2": 1},
            "w2": {"e1": -1, "e2": -1},
        },
    ),
    "torus": (["m"], ["a", "b"], ["M"], {}),
    "torus_cancel": (["m", "m2"], ["c", "a", "b"], ["M"], {"c": {"m": -1, "m2": 1}}),
    "genus2": (["m"], ["a1", "b1", "a2", "b2"], ["M"], {}),
}

SMALL_SHAPES = {"torus": 5, "torus_cancel": 3, "sphere_ring": 2, "sphere": 1, "sphere_cancel": 1}

# An unsigned swap of two torus handles reverses orientation, so on the torus
# shapes almost every shuffled closure is rejected.  The ring sphere has
# orientation-preserving symmetries; shuffle its closures every time.
CLOSURE_RATES = {"sphere_ring": 1.0}


def _events(rng: random.Random, loci1: list[str], n_slides: int, exchange_rate: float) -> list[dict]:
    order = list(loci1)
    events: list[dict[str, Any]] = []

    def exchange(i: int) -> None:
        events.append({"exchange": [order[i], order[i + 1]]})
        order[i], order[i + 1] = order[i + 1], order[i]

    for _ in range(n_slides):
        while len(order) > 1 and rng.random() < exchange_rate:
            exchange(rng.randrange(len(order) - 1))
        mover, over = rng.sample(loci1, 2)
        while order.index(mover) < order.index(over):
            exchange(order.index(mover))
        events.append({"slide": {"mover": mover, "over": over, "sign": rng.choice((1, -1))}})
    return events


def _permutation(rng: random.Random, names: list[str], rate: float) -> dict[str, str]:
    images = list(names)
    if rng.random() < rate:
        rng.shuffle(images)
    return dict(zip(names, images))


def random_presentation(
    rng: random.Random,
    *,
    shapes: dict[str, float] | None = None,
    max_slides: int = 4,
    exchange_rate: float = 0.3,
    closure_rate: float = 0.3,
    max_attempts: int = 1000,
) -> MorsePresentation:
    """Draw a valid presentation by rejection sampling.

    ``shapes`` maps shape names to relative weights (default: the shapes with
    at most three index-1 loci).  Candidates whose closed-up monodromy is not
    a chain map or not orientation preserving are redrawn within the same
    shape, so rejection does not skew the shape mix.
    """
    weights = SMALL_SHAPES if shapes is None else shapes
    names = sorted(weights)
    shape = rng.choices(names, weights=[weights[n] for n in names])[0]
    loci0, loci1, loci2, boundary = SHAPES[shape]
    rate = CLOSURE_RATES.get(shape, closure_rate)
    for _ in range(max_attempts):
        n_slides = rng.randint(0, max_slides) if len(loci1) > 1 else 0
        data = {
            "surface": {"index0": loci0, "index1": loci1, "index2": loci2},
            "boundary": boundary,
            "monodromy": {
                "events": _events(rng, loci1, n_slides, exchange_rate),
                "closure0": _permutation(rng, loci0, rate),
                "closure1": _permutation(rng, loci1, rate),
                "closure2": _permutation(rng, loci2, rate),
            },
        }
        try:
            return build_presentation(data)
        except (NotAChainMap, OrientationReversing):
            continue
    raise RuntimeError(f"no valid {shape} presentation found in {max_attempts} attempts")


def random_presentations(seed: int, count: int, **kwargs) -> list[MorsePresentation]:
    rng = random.Random(seed)
    return [random_presentation(rng, **kwargs) for _ in range(count)]
