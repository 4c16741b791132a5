#!/usr/bin/env python3
"""Record the worked-example API responses into contracts/worked_examples.json.

The browser calculator's preset tests replay these recorded responses, and a
server-side test asserts the live service still returns exactly these bodies,
so the two suites cannot drift apart.  `display` is the text the UI must
render for the preset, formatted only from response fields.
"""

from __future__ import annotations

import json
import os
import sys

sys.path.insert(0, os.path.join(os.path.dirname(__file__), "..", "src"))

from pilotsize import api  # noqa: E402

PRESETS = [
    {
        "name": "Standard deviation to 10%",
        "operation": "design",
        "payload": {"estimand": "stddev", "confidence": 0.95, "delta": 0.10},
        "display": "N = 234",
    },
    {
        "name": "Standard deviation interval from 5 subjects",
        "operation": "ci",
        "payload": {"estimand": "stddev", "confidence": 0.95, "n": 5},
        "display": "[0.5991s, 2.8736s]",
    },
    {
        "name": "Mean to 20% of the SD",
        "operation": "design",
        "payload": {"estimand": "mean", "confidence": 0.95, "delta": 0.20},
        "display": "N = 99",
    },
    {
        "name": "Proportion interval, 3 of 20",
        "operation": "ci",
        "payload": {"estimand": "proportion", "confidence": 0.95, "r": 3, "n": 20},
        "display": "[3.2%, 37.9%]",
    },
    {
        "name": "Proportion interval, 1 of 5",
        "operation": "ci",
        "payload": {"estimand": "proportion", "confidence": 0.95, "r": 1, "n": 5},
        "display": "[0.5%, 71.6%]",
    },
    {
        "name": "Rare proportion, 1% to half itself",
        "operation": "design",
        "payload": {"estimand": "proportion-rare", "confidence": 0.95,
                    "p": 0.01, "k": 0.5},
        "display": "N = 1741",
    },
    {
        "name": "Zero-acceptance screen at 1%",
        "operation": "design",
        "payload": {"estimand": "proportion-one-sided", "confidence": 0.95,
                    "p_u": 0.01},
        "display": "N = 299",
    },
    {
        "name": "Correlation interval, r = 0.3 from 20 subjects",
        "operation": "ci",
        "payload": {"estimand": "correlation", "confidence": 0.95,
                    "rho": 0.3, "n": 20},
        "display": "[-0.16, 0.66]",
    },
    {
        "name": "Correlation width 0.2 at rho = 0.3",
        "operation": "design",
        "payload": {"estimand": "correlation", "confidence": 0.95,
                    "rho": 0.3, "delta": 0.2},
        "display": "N = 320",
    },
    {
        "name": "Lifetime to 20%, stop at 90% infected",
        "operation": "design",
        "payload": {"estimand": "lifetime", "confidence": 0.95,
                    "k": 0.2, "censoring": 0.10},
        "display": "E = 388, N = 432",
    },
    {
        "name": "Lifetime interval from 20 events",
        "operation": "ci",
        "payload": {"estimand": "lifetime", "confidence": 0.95, "e": 20},
        "display": "[0.67, 1.64]",
    },
]


def main() -> None:
    entries = []
    for preset in PRESETS:
        resolved, errors = api.validate(preset["operation"], preset["payload"])
        if errors:
            raise SystemExit(f"{preset['name']}: {errors}")
        entries.append({**preset, "response": api.compute(preset["operation"], resolved)})
    out = os.path.join(os.path.dirname(__file__), "..", "contracts",
                       "worked_examples.json")
    with open(out, "w", encoding="utf-8") as fh:
        json.dump({"presets": entries}, fh, indent=1, sort_keys=True)
        fh.write("\n")
    print(f"wrote {out} ({len(entries)} presets)")


if __name__ == "__main__":
    main()
