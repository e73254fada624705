"""Synthetic hourly foot-traffic series used by the examples and tests."""

from __future__ import annotations

import csv
from pathlib import Path

import numpy as np

from .civil import Date, WeekStart, day_of_week, next_day


def _profile(hours: np.ndarray, workday: bool) -> np.ndarray:
    if workday:
        # commuter peaks around 8am and 5pm plus a lunch bump
        return (1800 * np.exp(-((hours - 8) ** 2) / 2)
                + 1500 * np.exp(-((hours - 17) ** 2) / 2)
                + 600 * np.exp(-((hours - 12.5) ** 2) / 3) + 60)
    return 700 * np.exp(-((hours - 14) ** 2) / 12) + 40


def hourly_counts(start: Date, end: Date, sensors=("Flagstaff Station",),
                  seed: int = 2016, gaps: dict | None = None) -> list[dict]:
    """
    One record per sensor per hour from ``start`` to ``end`` inclusive.

    ``gaps`` maps (sensor, date) to a collection of hours whose count is left
    empty, to mimic sensor outages.
    """
    rng = np.random.default_rng(seed)
    hours = np.arange(24)
    gaps = gaps or {}
    records = []
    for k, sensor in enumerate(sensors):
        d = start
        while True:
            workday = day_of_week(d, WeekStart.MONDAY) <= 5
            mean = _profile(hours, workday) * (1 + 0.4 * k)
            counts = rng.poisson(mean)
            missing = gaps.get((sensor, d), ())
            for hr in hours:
                records.append({
                    "Sensor": sensor,
                    "Date": str(d),
                    "Time": int(hr),
                    "Count": "" if hr in missing else int(counts[hr]),
                })
            if d == end:
                break
            d = next_day(d)
    return records


def write_csv(records: list[dict], path: str | Path) -> Path:
    path = Path(path)
    with open(path, "w", newline="", encoding="utf-8") as fh:
        writer = csv.DictWriter(fh, fieldnames=list(records[0]), lineterminator="\n")
        writer.writeheader()
        writer.writerows(records)
    return path


def main() -> None:
    import argparse

    parser = argparse.ArgumentParser(description="Write a synthetic hourly pedestrian CSV.")
    parser.add_argument("output")
    parser.add_argument("--year", type=int, default=2016)
    parser.add_argument("--sensors", type=int, default=1, choices=range(1, 4))
    args = parser.parse_args()
    names = ("Flagstaff Station", "Birrarung Marr", "State Library")[: args.sensors]
    write_csv(hourly_counts(Date(args.year, 1, 1), Date(args.year, 12, 31), names), args.output)


if __name__ == "__main__":
    main()
