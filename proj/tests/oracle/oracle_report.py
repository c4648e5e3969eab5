#!/usr/bin/env python3
"""Golden-report oracle.

Recomputes the mock-provider experiment over the small fixture from first
principles (direct formula evaluation on the CSV, no shared code with the
harness) and renders the report tables. Run from the repository root; the
outputs are frozen under tests/fixtures/ and compared byte-for-byte by the
acceptance suite.

  tests/fixtures/golden_report.txt
  tests/fixtures/golden_report.tsv
  tests/fixtures/expected_rows.tsv   (input for the validate subcommand test)

Float arithmetic deliberately follows the same operation order as the
implementation so the rendered digits agree to the last bit; every rendered
value is additionally asserted to sit far from a decimal rounding boundary.
"""

import csv
import json

MODEL = "mock:age >= 38"
THRESHOLD = 38

DEFINITIONS = [
    "No Fairness", "Demographic Parity", "Equal Opportunity", "Equalized Odds",
    "Overall Accuracy Equality", "Treatment Equality", "Causal Discrimination",
    "Fairness through Unawareness", "Generic Fairness",
]

INF = "inf"
UNDEF = "undef"
LABEL_W = 31
VALUE_W = 12
GAP = "  "
HEADS = ["Accuracy", "F1", "DI'", "TPR'", "FPR'", "PPV'", "FOR'", "Acc'"]


def assert_off_boundary(v, decimals):
    scaled = v * (10 ** decimals)
    frac = abs(scaled - int(scaled))
    dist = min(abs(frac - 0.5), abs(frac + 0.5 - 1.0)) if frac > 0.5 else abs(frac - 0.5)
    assert dist > 1e-6, f"{v!r} rounds ambiguously at {decimals} decimals"


def two_dp(v):
    assert_off_boundary(v, 2)
    return f"{v:.2f}"


def six_dp(v):
    assert_off_boundary(v, 6)
    return f"{v:.6f}"


def rate(num, den):
    if den != 0.0:
        return num / den
    return INF if num != 0.0 else UNDEF


def ratio_of(f, m):
    if f == UNDEF or m == UNDEF:
        return UNDEF
    if f == INF and m == INF:
        return UNDEF
    if f == INF:
        return INF
    if m == INF:
        return 0.0
    return rate(f, m)


def deviation(x):
    if x in (INF, UNDEF):
        return x
    return abs(1.0 - x)


def eighty_pass(dev):
    return dev not in (INF, UNDEF) and dev <= 0.2


def fmt_metric(v):
    if v == INF:
        return "∞"
    if v == UNDEF:
        return "—"
    return two_dp(v)


def tsv_metric(v):
    if v == INF:
        return "inf"
    if v == UNDEF:
        return "undef"
    return six_dp(v)


def pad(s, w):
    return s + " " * max(0, w - len(s))


def load_test_records():
    rows = list(csv.DictReader(open("tests/fixtures/synth_small.csv")))
    manifest = json.load(open("tests/fixtures/synth_small_manifest.json"))
    test = []
    for e in manifest["test"]:
        r = rows[e["id"]]
        assert r["gender"] == e["group"] and r["income"] == e["income"]
        test.append(r)
    return test


def compute_report(test):
    female = {"tp": 0, "fp": 0, "tn": 0, "fn": 0}
    male = {"tp": 0, "fp": 0, "tn": 0, "fn": 0}
    preds, golds = [], []
    for r in test:
        pred_pos = int(r["age"]) >= THRESHOLD
        gold_pos = r["income"] == ">50K"
        c = female if r["gender"] == "Female" else male
        key = ("tp" if gold_pos else "fp") if pred_pos else ("fn" if gold_pos else "tn")
        c[key] += 1
        preds.append(pred_pos)
        golds.append(gold_pos)

    def n(c):
        return c["tp"] + c["fp"] + c["tn"] + c["fn"]

    f, m = female, male
    ratios = [
        ratio_of(rate(f["tp"] + f["fp"], n(f)), rate(m["tp"] + m["fp"], n(m))),
        ratio_of(rate(f["tp"], f["tp"] + f["fn"]), rate(m["tp"], m["tp"] + m["fn"])),
        ratio_of(rate(f["fp"], f["fp"] + f["tn"]), rate(m["fp"], m["fp"] + m["tn"])),
        ratio_of(rate(f["tp"], f["tp"] + f["fp"]), rate(m["tp"], m["tp"] + m["fp"])),
        ratio_of(rate(f["fn"], f["tn"] + f["fn"]), rate(m["fn"], m["tn"] + m["fn"])),
        ratio_of(rate(f["tp"] + f["tn"], n(f)), rate(m["tp"] + m["tn"], n(m))),
    ]
    devs = [deviation(x) for x in ratios]

    # Balanced accuracy over classes present in the golds; macro F1 over both
    # classes with zero conventions. Class index 0 = <=50K, 1 = >50K.
    gold_n = [0, 0]
    pred_n = [0, 0]
    correct = [0, 0]
    for p, g in zip(preds, golds):
        gi, pi = int(g), int(p)
        gold_n[gi] += 1
        pred_n[pi] += 1
        if gi == pi:
            correct[gi] += 1
    recall_sum, present = 0.0, 0
    for c in range(2):
        if gold_n[c] > 0:
            recall_sum += correct[c] / gold_n[c]
            present += 1
    f1_sum = 0.0
    for c in range(2):
        precision = correct[c] / pred_n[c] if pred_n[c] > 0 else 0.0
        recall = correct[c] / gold_n[c] if gold_n[c] > 0 else 0.0
        f1 = 2.0 * precision * recall / (precision + recall) if precision + recall > 0.0 else 0.0
        f1_sum += f1
    macro_acc = recall_sum / present
    macro_f1 = f1_sum / 2.0

    return {
        "female": f, "male": m, "ratios": ratios, "devs": devs,
        "macro_acc": macro_acc, "macro_f1": macro_f1,
        "parsed": len(test), "refusals": 0,
    }


def mean_absorbing(values):
    s, finite, infinite, any_finite = 0.0, 0, False, False
    for v in values:
        if v == INF:
            infinite = True
        elif v == UNDEF:
            pass
        else:
            s += v
            finite += 1
            any_finite = True
    if infinite:
        return INF
    if not any_finite:
        return UNDEF
    return s / finite


def delta_cell(v, base, higher_is_better):
    out = fmt_metric(v)
    if base is None or v == UNDEF or base == UNDEF:
        return out
    if v == INF and base == INF:
        improved = True
    elif v == INF:
        improved = higher_is_better
    elif base == INF:
        improved = not higher_is_better
    elif v == base:
        improved = True
    elif higher_is_better:
        improved = v > base
    else:
        improved = v < base
    delta = two_dp(abs(v - base)) if v not in (INF, UNDEF) and base not in (INF, UNDEF) \
        else "—"
    return f"{out} ↑ {delta}" if improved else f"{out} ↓ {delta}"


def render(sections):
    text_parts = []
    for model, shot, level, rows, avg in sections:
        lines = [f"=== model={model} shot={shot} rules={level} ===", ""]
        head = pad("Definition", LABEL_W)
        for h in HEADS:
            head += GAP + pad(h, VALUE_W)
        lines.append(head.rstrip(" "))
        lines.append("-" * LABEL_W + (GAP + "-" * VALUE_W) * len(HEADS))
        for name, rep in rows:
            cells = [rep["macro_acc"], rep["macro_f1"]] + rep["devs"]
            line = pad(name, LABEL_W)
            for v in cells:
                line += GAP + pad(fmt_metric(v), VALUE_W)
            lines.append(line.rstrip(" "))

        base = rows[0][1]
        base_cells = [base["macro_acc"], base["macro_f1"]] + base["devs"]
        line = pad("Average (8 definitions)", LABEL_W)
        for i, v in enumerate(avg):
            line += GAP + pad(delta_cell(v, base_cells[i], i < 2), VALUE_W)
        lines.append(line.rstrip(" "))

        verdicts = ", ".join(
            f"{name} {'pass' if eighty_pass(avg[2 + i]) else 'fail'}"
            for i, name in enumerate(["DI'", "TPR'", "FPR'", "PPV'", "FOR'", "Acc'"]))
        lines.append(f"80% rule (average): {verdicts}")
        text_parts.append("\n".join(lines) + "\n")
    return "\n".join(text_parts)


def render_tsv(sections):
    cols = ("model\tshot\trules\tdefinition\tmacro_accuracy\tmacro_f1\t"
            "di_ratio\ttpr_ratio\tfpr_ratio\tppv_ratio\tfor_ratio\tacc_ratio\t"
            "di_dev\ttpr_dev\tfpr_dev\tppv_dev\tfor_dev\tacc_dev\t"
            "di_80\ttpr_80\tfpr_80\tppv_80\tfor_80\tacc_80\t"
            "parsed_count\trefusal_count\t"
            "f_tp\tf_fp\tf_tn\tf_fn\tm_tp\tm_fp\tm_tn\tm_fn\n")
    out = cols
    flag = lambda b: "true" if b else "false"
    for model, shot, level, rows, avg in sections:
        for name, r in rows:
            out += f"{model}\t{shot}\t{level}\t{name}\t"
            out += tsv_metric(r["macro_acc"]) + "\t" + tsv_metric(r["macro_f1"]) + "\t"
            for v in r["ratios"] + r["devs"]:
                out += tsv_metric(v) + "\t"
            for d in r["devs"]:
                out += flag(eighty_pass(d)) + "\t"
            out += f"{r['parsed']}\t{r['refusals']}\t"
            f, m = r["female"], r["male"]
            out += (f"{f['tp']}\t{f['fp']}\t{f['tn']}\t{f['fn']}\t"
                    f"{m['tp']}\t{m['fp']}\t{m['tn']}\t{m['fn']}\n")
        out += f"{model}\t{shot}\t{level}\tAverage\t"
        out += tsv_metric(avg[0]) + "\t" + tsv_metric(avg[1]) + "\t"
        out += "-\t" * 6
        for v in avg[2:]:
            out += tsv_metric(v) + "\t"
        for v in avg[2:]:
            out += flag(eighty_pass(v)) + "\t"
        out += "-\t-\t-\t-\t-\t-\t-\t-\t-\t-\n"
    return out


def main():
    test = load_test_records()
    rep = compute_report(test)

    sections = []
    for shot in ["zero", "few"]:
        for level in ["abstract", "detailed"]:
            rows = [(name, rep) for name in DEFINITIONS]
            non_baseline = [r for name, r in rows if name != "No Fairness"]
            avg = [
                mean_absorbing([r["macro_acc"] for r in non_baseline]),
                mean_absorbing([r["macro_f1"] for r in non_baseline]),
            ] + [
                mean_absorbing([r["devs"][i] for r in non_baseline]) for i in range(6)
            ]
            sections.append((MODEL, shot, level, rows, avg))

    with open("tests/fixtures/golden_report.txt", "w", newline="") as fh:
        fh.write(render(sections))
    with open("tests/fixtures/golden_report.tsv", "w", newline="") as fh:
        fh.write(render_tsv(sections))

    expected = "model\tshot\trules\tdefinition\taccuracy\tf1\tdi\ttpr\tfpr\tppv\tfor\tacc\n"
    for model, shot, level, rows, _ in sections:
        for name, r in rows:
            vals = [r["macro_acc"], r["macro_f1"]] + r["ratios"]
            expected += f"{model}\t{shot}\t{level}\t{name}\t"
            expected += "\t".join(tsv_metric(v) for v in vals) + "\n"
    with open("tests/fixtures/expected_rows.tsv", "w", newline="") as fh:
        fh.write(expected)

    print("confusion female", rep["female"], "male", rep["male"])
    print("ratios", [fmt_metric(v) for v in rep["ratios"]])
    print("devs  ", [fmt_metric(v) for v in rep["devs"]])
    print("macro_acc", rep["macro_acc"], "macro_f1", rep["macro_f1"])


if __name__ == "__main__":
    main()
