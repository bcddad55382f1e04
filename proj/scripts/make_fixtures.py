#!/usr/bin/env python3
"""Regenerates the synthetic corpora under data/fixtures/.

Everything is derived from a fixed seed, so rerunning this script must
reproduce the checked-in files byte for byte.

The corpora are synthetic but shaped like the real task data:
  * legal_train_a.jsonl / legal_train_b.jsonl: 312 rows each, sharing 162
    near-duplicate rows (same content up to whitespace/case noise, different
    ids), so their aggregation yields 462 unique rows.
  * legal_test.jsonl (+ .csv): 84 rows, class counts 40/29/15 and domain
    supports BIPA 22, Data-Breach 20, VPPA 6, TCPA 9, Consumer 8, WAGE 19.
  * generic_pool.jsonl: 600 short generic NLI rows for stage-1 training.

Labels are signalled by dedicated keywords in each hypothesis, which keeps
the corpora learnable by the bag-of-ngrams reference backend.
"""

import json
import random
from pathlib import Path

SEED = 20240901
ROOT = Path(__file__).resolve().parent.parent
FIXTURES = ROOT / "data" / "fixtures"
EXPECTED = ROOT / "data" / "expected"

LABELS = ["Entailed", "Neutral", "Contradict"]

# Label-signal sentences. The signal tokens (confirms/corroborates,
# contradicts/refutes, unrelated/tangential) appear nowhere in the filler
# pools below, so every row is separable from its hypothesis alone.
SIGNALS = {
    "Entailed": [
        "The review clearly confirms the allegations described in the case.",
        "Overall this account corroborates the complaint.",
    ],
    "Contradict": [
        "The review plainly contradicts the allegations described in the case.",
        "Overall this account refutes the complaint.",
    ],
    "Neutral": [
        "The review seems unrelated to the allegations described in the case.",
        "Overall this account is tangential to the complaint.",
    ],
}

SHORT_SIGNALS = {
    "Entailed": "This clearly confirms the description.",
    "Contradict": "This plainly contradicts the description.",
    "Neutral": "This seems unrelated to the description.",
}

DOMAIN_PREMISE = {
    "BIPA": [
        "The settled class action alleged that the employer scanned worker fingerprints without written consent.",
        "Plaintiffs claimed the company stored biometric templates past the retention deadline.",
        "The complaint said handprint readers logged employees without a published data policy.",
        "Class members alleged their face geometry was collected by time clocks in Illinois facilities.",
    ],
    "Data-Breach": [
        "The resolved case alleged that an intrusion exposed customer records held on an unprotected server.",
        "Plaintiffs claimed the breach leaked payment card numbers over several months.",
        "The complaint said attackers accessed account databases after patches were skipped.",
        "Class members alleged notice of the incident arrived long after their files were taken.",
    ],
    "VPPA": [
        "The settled case alleged that viewing histories were shared with advertisers without permission.",
        "Plaintiffs claimed the streaming service disclosed rental records to analytics partners.",
        "The complaint said subscriber watch lists were transmitted alongside device identifiers.",
    ],
    "TCPA": [
        "The resolved class action alleged that an autodialer placed marketing calls to numbers on the registry.",
        "Plaintiffs claimed prerecorded messages kept arriving after they revoked consent.",
        "The complaint said promotional texts were blasted to consumers who never opted in.",
    ],
    "Consumer": [
        "The settled case alleged that the product labels overstated the quantity inside each package.",
        "Plaintiffs claimed advertised discounts were computed from invented list prices.",
        "The complaint said warranty claims were routinely denied despite covered defects.",
    ],
    "WAGE": [
        "The resolved case alleged that hourly staff worked through breaks without pay.",
        "Plaintiffs claimed overtime hours were rounded away by the scheduling system.",
        "The complaint said tipped employees covered register shortages from their own wages.",
    ],
}

PREMISE_FILLER = [
    "The settlement established a fund for affected class members.",
    "Damages were distributed according to the length of class membership.",
    "The company denied wrongdoing but agreed to change its practices.",
    "Notice of the settlement was mailed to all identified class members.",
    "The court granted final approval after a fairness hearing.",
    "Claims administration continued for a year after the approval order.",
    "Counsel fees were paid separately from the class recovery.",
]

REVIEW_FILLER = {
    "BIPA": [
        "I clocked in with a fingerprint scanner every single shift.",
        "Nobody ever handed me a form about my biometric data.",
        "The time clock at this job takes a handprint before each shift.",
        "I asked about the scanner records and got no answer.",
    ],
    "Data-Breach": [
        "I got a letter saying my account information was exposed.",
        "My card was replaced twice after shopping on this site.",
        "The company email about the security incident came months late.",
        "I spent weeks watching my statements for strange charges.",
    ],
    "VPPA": [
        "Ads started following me right after I streamed a few movies.",
        "My watch history showed up in a partner app I never used.",
        "I rented documentaries and suddenly got mailers about them.",
    ],
    "TCPA": [
        "My phone rang with robocalls from this company every day.",
        "I kept getting marketing texts after I replied stop.",
        "The prerecorded voice called even on weekends.",
    ],
    "Consumer": [
        "The box contained far less product than the label promised.",
        "Their sale price was the everyday price with a fake markdown.",
        "My warranty claim was rejected for a defect they knew about.",
    ],
    "WAGE": [
        "I worked through lunch most days and was never paid for it.",
        "My overtime hours kept disappearing from the timesheet.",
        "Managers made us count the drawer after clocking out.",
    ],
}

REVIEW_GENERIC = [
    "Customer service never answered my messages.",
    "I used this service for about two years.",
    "The app itself worked fine most of the time.",
    "I would warn my friends about this company.",
    "Honestly the whole experience left me frustrated.",
    "Their staff was polite whenever I visited the branch.",
]

GENERIC_PREMISE = [
    "A man is walking a brown dog through the park.",
    "Two children are building a sandcastle on the beach.",
    "A chef is plating pasta in a busy kitchen.",
    "A woman rides a bicycle down a tree lined street.",
    "Several musicians are performing on an outdoor stage.",
    "A group of hikers climbs a rocky trail at dawn.",
    "An artist paints a mural on the side of a building.",
    "A farmer loads crates of vegetables onto a truck.",
]

GENERIC_HYPOTHESIS = [
    "A person is outside with an animal.",
    "Some people are near the water.",
    "Someone is preparing food.",
    "A vehicle is being used on a street.",
    "Music is being played for an audience.",
    "People are walking uphill in the morning.",
    "Artwork is appearing on a wall.",
    "Produce is being moved for sale.",
]


def premise_for(rng, domain):
    opener = rng.choice(DOMAIN_PREMISE[domain])
    n_filler = rng.randint(3, 6)
    body = rng.sample(PREMISE_FILLER, n_filler)
    return " ".join([opener] + body)


def hypothesis_for(rng, domain, label):
    n_filler = rng.randint(2, 5)
    pool = REVIEW_FILLER[domain] + REVIEW_GENERIC
    body = rng.sample(pool, n_filler)
    sig = list(SIGNALS[label])
    # signal sentences land at deterministic pseudo-random positions
    for s in sig:
        body.insert(rng.randrange(len(body) + 1), s)
    return " ".join(body)


LEGAL_ACT = {
    "BIPA": "Privacy",
    "Data-Breach": "Privacy",
    "VPPA": "Privacy",
    "TCPA": "TCPA",
    "Consumer": "Consumer",
    "WAGE": "WAGE",
}


def make_rows(rng, specs, id_prefix):
    rows = []
    for i, (label, domain) in enumerate(specs):
        rows.append(
            {
                "id": f"{id_prefix}{i + 1:04d}",
                "premise": premise_for(rng, domain),
                "hypothesis": hypothesis_for(rng, domain, label),
                "label": label,
                "legal_act": LEGAL_ACT[domain],
                "domain": domain,
            }
        )
    return rows


def counted(label_counts, domain_counts, rng):
    """Interleave label and domain multisets deterministically."""
    labels = [l for l, n in label_counts for _ in range(n)]
    domains = [d for d, n in domain_counts for _ in range(n)]
    rng.shuffle(labels)
    rng.shuffle(domains)
    return list(zip(labels, domains))


def perturb(rng, text):
    """Whitespace/case noise that survives trim+collapse+casefold dedup."""
    words = text.split(" ")
    for _ in range(3):
        k = rng.randrange(len(words))
        words[k] = words[k].upper() if rng.random() < 0.5 else words[k].lower()
    out = []
    for w in words:
        out.append(w)
        if rng.random() < 0.08:
            out.append("")  # doubled space
    s = " ".join(out)
    if rng.random() < 0.5:
        s = "  " + s
    if rng.random() < 0.5:
        s = s + " "
    return s


def write_jsonl(path, rows):
    with open(path, "w", encoding="utf-8") as f:
        for r in rows:
            f.write(json.dumps(r, ensure_ascii=False) + "\n")


def csv_field(s):
    if any(c in s for c in ',"\n'):
        return '"' + s.replace('"', '""') + '"'
    return s


def write_csv(path, rows):
    cols = ["id", "premise", "hypothesis", "label", "legal_act", "domain"]
    with open(path, "w", encoding="utf-8", newline="") as f:
        f.write(",".join(cols) + "\r\n")
        for r in rows:
            f.write(",".join(csv_field(str(r.get(c, ""))) for c in cols) + "\r\n")


def main():
    rng = random.Random(SEED)
    FIXTURES.mkdir(parents=True, exist_ok=True)
    EXPECTED.mkdir(parents=True, exist_ok=True)

    # ---- aggregated legal training pool: 462 unique rows -------------------
    # legal_act supports: Privacy 229 (BIPA 100, Data-Breach 89, VPPA 40),
    # TCPA 111, Consumer 102, WAGE 20.
    # File A holds uniques [0, 312) with labels E102/N106/C104; file B holds
    # 162 perturbed duplicates of A plus uniques [312, 462).
    specs_a = counted(
        [("Entailed", 102), ("Neutral", 106), ("Contradict", 104)],
        [("BIPA", 68), ("Data-Breach", 60), ("VPPA", 27), ("TCPA", 75), ("Consumer", 68), ("WAGE", 14)],
        rng,
    )
    specs_new = counted(
        [("Entailed", 48), ("Neutral", 52), ("Contradict", 50)],
        [("BIPA", 32), ("Data-Breach", 29), ("VPPA", 13), ("TCPA", 36), ("Consumer", 34), ("WAGE", 6)],
        rng,
    )
    rows_a = make_rows(rng, specs_a, "nllp-a-")
    rows_new = make_rows(rng, specs_new, "nllp-x-")

    # 162 duplicates: 54 per label, drawn from file A.
    dup_sources = []
    for label in LABELS:
        pool = [r for r in rows_a if r["label"] == label]
        dup_sources += rng.sample(pool, 54)

    rows_b = []
    for i, r in enumerate(rows_new + dup_sources):
        q = dict(r)
        q["id"] = f"nllp-b-{i + 1:04d}"
        if r in dup_sources:
            q["premise"] = perturb(rng, q["premise"])
            q["hypothesis"] = perturb(rng, q["hypothesis"])
        rows_b.append(q)
    rng.shuffle(rows_b)

    assert len(rows_a) == 312 and len(rows_b) == 312
    assert len(rows_a) + len(rows_b) - 162 == 462

    write_jsonl(FIXTURES / "legal_train_a.jsonl", rows_a)
    write_jsonl(FIXTURES / "legal_train_b.jsonl", rows_b)

    # ---- test split: 84 rows, counts 40/29/15 ------------------------------
    test_specs = counted(
        [("Entailed", 40), ("Neutral", 29), ("Contradict", 15)],
        [("BIPA", 22), ("Data-Breach", 20), ("VPPA", 6), ("TCPA", 9), ("Consumer", 8), ("WAGE", 19)],
        rng,
    )
    rows_test = make_rows(rng, test_specs, "test-")
    write_jsonl(FIXTURES / "legal_test.jsonl", rows_test)
    write_csv(FIXTURES / "legal_test.csv", rows_test)

    # ---- generic stage-1 pool: 600 short rows ------------------------------
    pool_rows = []
    labels_pool = ["Entailed"] * 204 + ["Neutral"] * 199 + ["Contradict"] * 197
    rng.shuffle(labels_pool)
    for i, label in enumerate(labels_pool):
        k = rng.randrange(len(GENERIC_PREMISE))
        pool_rows.append(
            {
                "id": f"snli-{i + 1:05d}",
                "premise": GENERIC_PREMISE[k],
                "hypothesis": GENERIC_HYPOTHESIS[k] + " " + SHORT_SIGNALS[label],
                "label": label,
            }
        )
    write_jsonl(FIXTURES / "generic_pool.jsonl", pool_rows)

    # ---- published split distributions -------------------------------------
    for name, fracs in {
        "distribution_test.json": {"Entailed": 0.476, "Neutral": 0.345, "Contradict": 0.179},
        "distribution_generic_train.json": {"Entailed": 0.340, "Neutral": 0.331, "Contradict": 0.329},
        "distribution_legal_train.json": {"Entailed": 0.327, "Neutral": 0.339, "Contradict": 0.333},
    }.items():
        with open(EXPECTED / name, "w", encoding="utf-8") as f:
            json.dump(fracs, f, indent=2)
            f.write("\n")

    print("fixtures written to", FIXTURES)


if __name__ == "__main__":
    main()
