#!/usr/bin/env python3
"""Regenerate the bundled synthetic benchmark instances under data/.

The instances imitate the shape of an urban medical-waste collection problem
(28 daytime sites with depot id 29; 15 nighttime sites with depot id 16) but
all coordinates, demands and risk figures are synthetic. Distances are
Euclidean with a fixed detour factor, clamped to a plausible urban range.
Deterministic: fixed seeds, stable output.
"""

import json
import math
import random
import re
from pathlib import Path

DATA_DIR = Path(__file__).resolve().parent.parent / "data"


def sample_sites(rng, count, box, min_sep, depot, depot_sep):
    points = []
    attempts = 0
    while len(points) < count:
        attempts += 1
        if attempts > 200000:
            raise RuntimeError("site sampling did not converge; relax min_sep")
        p = (rng.uniform(0, box[0]), rng.uniform(0, box[1]))
        if math.dist(p, depot) < depot_sep:
            continue
        if all(math.dist(p, q) >= min_sep for q in points):
            points.append(p)
    return points


def distance_matrix(coords, detour, clamp, asym=1.0):
    n = len(coords)
    m = [[0.0] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            if i == j:
                continue
            d = math.dist(coords[i], coords[j]) * detour
            d = min(max(d, clamp[0]), clamp[1])
            if i < j:
                d *= asym
            m[i][j] = round(d, 2)
    return m


def nearest_sites(coords, k):
    depot = coords[0]
    order = sorted(range(1, len(coords)), key=lambda i: math.dist(coords[i], depot))
    return order[:k]


def compact_number_arrays(text):
    return re.sub(r"\[[^\[\]{}]*\]", lambda m: re.sub(r"\s+", " ", m.group(0)), text)


def write(path, obj):
    path.parent.mkdir(parents=True, exist_ok=True)
    text = compact_number_arrays(json.dumps(obj, indent=1)) + "\n"
    path.write_text(text)
    print(f"wrote {path}")


def make_day():
    rng = random.Random(20230415)
    depot = (5.0, 4.0)
    sites = sample_sites(rng, 28, (10.0, 8.0), 1.6, depot, 1.2)
    coords = [depot] + sites

    while True:
        demands = [round(rng.uniform(0.06, 0.15), 3) for _ in sites]
        if sum(demands) <= 2.95:
            break
    services = [round(rng.uniform(0.12, 0.25), 2) for _ in sites]

    downtown = nearest_sites(coords, 3)
    overrides = []
    for s in downtown:
        for a, b in ((0, s), (s, 0)):
            overrides.append(
                {
                    "from": a,
                    "to": b,
                    "population_density": 1200.0,
                    "personal_property_value": 6.0e7,
                    "public_property_value": 4.0e7,
                }
            )

    return {
        "name": "synthetic-dalian-day",
        "description": "Synthetic 28-site daytime benchmark (generated by "
        "scripts/make_synthetic_instances.py; all figures synthetic)",
        "scenario": "general",
        "depot_id": 29,
        "sites": [
            {"id": i + 1, "demand": demands[i], "service_time": services[i]}
            for i in range(len(sites))
        ],
        "distance": distance_matrix(coords, 1.3, (2.0, 15.0)),
        "coordinates": [[round(x, 3), round(y, 3)] for x, y in coords],
        "risk_defaults": {
            "accident_rate": 0.002,
            "leak_prob": 0.05,
            "speed_kmh": 40.0,
            "water_area": 300.0,
            "air_area": 400.0,
            "soil_area": 200.0,
            "sherwood_water": 0.6,
            "sherwood_air": 0.5,
            "sherwood_soil": 0.4,
            "harm_level": 1.0,
            "fatality_rate": 0.1,
            "impact_radius_km": 0.3,
            "population_density": 150.0,
            "segment_area": 2.0,
            "impacted_area": 0.3,
            "personal_property_value": 3.0e7,
            "public_property_value": 2.0e7,
            "damage_severity": 0.3,
        },
        "risk_overrides": overrides,
        "fleet": {
            "num_vehicles": 3,
            "capacity": 3.0,
            "fixed_cost": 120.0,
            "unit_transport_cost": 20.0,
            "penalty": 1000.0,
            "window_start": 8.0,
            "window_end": 18.0,
            "depart": 8.0,
        },
    }


def make_night():
    rng = random.Random(20230416)
    depot = (3.5, 3.0)
    sites = sample_sites(rng, 15, (7.0, 6.0), 1.3, depot, 1.0)
    coords = [depot] + sites

    while True:
        demands = [round(rng.uniform(0.195, 0.215), 3) for _ in sites]
        if 3.02 <= sum(demands) <= 3.12:
            break
    services = [round(rng.uniform(0.12, 0.22), 2) for _ in sites]

    return {
        "name": "synthetic-dalian-night",
        "description": "Synthetic 15-site nighttime (covid) benchmark (generated "
        "by scripts/make_synthetic_instances.py; all figures synthetic)",
        "scenario": "covid",
        "depot_id": 16,
        "sites": [
            {"id": i + 1, "demand": demands[i], "service_time": services[i]}
            for i in range(len(sites))
        ],
        "distance": distance_matrix(coords, 1.3, (2.0, 12.0), asym=1.04),
        "coordinates": [[round(x, 3), round(y, 3)] for x, y in coords],
        "risk_defaults": {
            "accident_rate": 0.002,
            "leak_prob": 0.05,
            "speed_kmh": 40.0,
            "water_area": 300.0,
            "air_area": 400.0,
            "soil_area": 200.0,
            "sherwood_water": 0.6,
            "sherwood_air": 0.5,
            "sherwood_soil": 0.4,
            "harm_level": 1.2,
            "fatality_rate": 0.12,
            "impact_radius_km": 0.3,
            "population_density": 120.0,
            "segment_area": 2.0,
            "impacted_area": 0.3,
            "personal_property_value": 3.0e7,
            "public_property_value": 2.0e7,
            "damage_severity": 0.3,
        },
        "fleet": {
            "num_vehicles": 3,
            "capacity": 3.0,
            "fixed_cost": 120.0,
            "unit_transport_cost": 20.0,
            "penalty": 1000.0,
            "window_start": 18.0,
            "window_end": 24.0,
            "depart": 18.0,
            "covid": {
                "deterioration": 0.08,
                "conductivity": 2.5,
                "body_surface": 59.12,
                "delta_t": 20.0,
                "unit_cooling": 0.5,
                "carriage_volume": 26.78,
                "door_factor": 2.0,
                "night_window_start": 18.0,
                "night_window_end": 24.0,
            },
        },
    }


if __name__ == "__main__":
    write(DATA_DIR / "synthetic_dalian_day.json", make_day())
    write(DATA_DIR / "synthetic_dalian_night.json", make_night())
