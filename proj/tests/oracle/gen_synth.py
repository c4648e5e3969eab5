#!/usr/bin/env python3
"""Generates the synthetic census-style fixtures.

Run from the repository root. Outputs are checked in, so rerunning must be
byte-stable:
  data/synth_adult_1200.csv          300 valid records per (gender, income)
                                     cell plus a few '?' rows that only
                                     consume record ids
  tests/fixtures/synth_small.csv     140 records; ids 0..39 form a designed
                                     test split (10 per cell), 40..139 are
                                     the demonstration pool
  tests/fixtures/synth_small_manifest.json
"""

import json
import os
import random

WORKCLASS = ["Private", "Self-emp-not-inc", "Local-gov", "State-gov", "Federal-gov"]
EDUCATION = [("Bachelors", 13), ("HS-grad", 9), ("Masters", 14), ("Some-college", 10),
             ("Assoc-acdm", 12), ("11th", 7)]
MARITAL = ["Never-married", "Married-civ-spouse", "Divorced", "Widowed"]
OCCUPATION = ["Tech-support", "Craft-repair", "Sales", "Exec-managerial",
              "Prof-specialty", "Adm-clerical"]
RELATIONSHIP = ["Husband", "Wife", "Not-in-family", "Unmarried", "Own-child"]
RACE = ["White", "Black", "Asian-Pac-Islander", "Amer-Indian-Eskimo", "Other"]
COUNTRY = ["United-States", "Mexico", "Philippines", "Germany", "Canada", "India"]

HEADER = ("age,workclass,final weight,education,education number,marital status,"
          "occupation,relationship,race,gender,capital gain,capital loss,"
          "hours per week,native country,income")


def make_row(rng, gender, income, age):
    edu, edu_num = rng.choice(EDUCATION)
    gain = rng.choice([0, 0, 0, 0, 2174, 5178, 15024])
    loss = rng.choice([0, 0, 0, 0, 0, 1902, 1887])
    return [
        str(age),
        rng.choice(WORKCLASS),
        str(rng.randint(20000, 400000)),
        edu,
        str(edu_num),
        rng.choice(MARITAL),
        rng.choice(OCCUPATION),
        rng.choice(RELATIONSHIP),
        rng.choice(RACE),
        gender,
        str(gain),
        str(loss),
        str(rng.randint(20, 60)),
        rng.choice(COUNTRY),
        income,
    ]


def write_csv(path, rows):
    with open(path, "w", newline="") as f:
        f.write(HEADER + "\n")
        for r in rows:
            f.write(",".join(r) + "\n")


def gen_large(rng):
    rows = []
    for gender in ["Female", "Male"]:
        for income in ["<=50K", ">50K"]:
            for _ in range(300):
                rows.append(make_row(rng, gender, income, rng.randint(18, 80)))
    rng.shuffle(rows)
    # A few rows with missing fields, spread through the file. Loaders drop
    # them but still burn a record id for each.
    for pos in [3, 117, 645, 1100]:
        bad = make_row(rng, rng.choice(["Female", "Male"]),
                       rng.choice(["<=50K", ">50K"]), rng.randint(18, 80))
        bad[rng.randrange(1, 9)] = "?"
        rows.insert(pos, bad)
    write_csv("data/synth_adult_1200.csv", rows)


# The small fixture pins the confusion matrix of the threshold rule
# "age >= 38" (predict >50K at or above 38, <=50K below):
#   female <=50K: 2 predicted high, 8 low   -> fp=2 tn=8
#   female >50K:  6 predicted high, 4 low   -> tp=6 fn=4
#   male <=50K:   0 predicted high, 10 low  -> fp=0 tn=10 (infinite FPR ratio)
#   male >50K:    8 predicted high, 2 low   -> tp=8 fn=2
def gen_small(rng):
    cells = [
        ("Female", "<=50K", [44, 51] + [22, 25, 27, 29, 31, 33, 35, 37]),
        ("Female", ">50K", [39, 42, 46, 50, 55, 61] + [24, 28, 32, 36]),
        ("Male", "<=50K", [21, 23, 26, 28, 30, 32, 34, 36, 37, 35]),
        ("Male", ">50K", [38, 40, 43, 47, 52, 57, 62, 66] + [27, 33]),
    ]
    rows = []
    for gender, income, ages in cells:
        for age in ages:
            rows.append(make_row(rng, gender, income, age))
    test_meta = [(i, r[9], r[14]) for i, r in enumerate(rows)]

    for gender in ["Female", "Male"]:
        for income in ["<=50K", ">50K"]:
            for _ in range(25):
                rows.append(make_row(rng, gender, income, rng.randint(18, 80)))
    write_csv("tests/fixtures/synth_small.csv", rows)

    manifest = {
        "dataset_path": "tests/fixtures/synth_small.csv",
        "pool_ids": list(range(40, 140)),
        "protected_column": "gender",
        "privileged_value": "Male",
        "seed": 7,
        "test": [{"group": g, "id": i, "income": inc} for i, g, inc in test_meta],
        "unprivileged_value": "Female",
    }
    with open("tests/fixtures/synth_small_manifest.json", "w") as f:
        json.dump(manifest, f, indent=2, sort_keys=True)
        f.write("\n")


def main():
    os.makedirs("data", exist_ok=True)
    os.makedirs("tests/fixtures", exist_ok=True)
    gen_large(random.Random(20240301))
    gen_small(random.Random(20240302))


if __name__ == "__main__":
    main()
