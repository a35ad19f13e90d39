"""Record real API responses as contract-test fixtures.

Runs the actual FastAPI app in-process against the bundled packs with
fixed seeds and a deterministic clock, drives a handful of sessions,
and freezes the interesting response documents under frontend/fixtures/.
Rerun after any API change:

    python frontend/scripts/record_fixtures.py
"""

from __future__ import annotations

import itertools
import json
from pathlib import Path

from fastapi.testclient import TestClient

from lexitrain import fixtures
from lexitrain.progress import ProgressStore
from lexitrain.service import create_app

OUT_DIR = Path(__file__).resolve().parent.parent / "fixtures"


def correct_index(pack, question_doc):
    item = next(i for i in pack.iter_items() if i.english == question_doc["prompt"])
    return question_doc["options"].index(item.translation)


def wrong_index(pack, question_doc):
    return (correct_index(pack, question_doc) + 1) % 4


def write(name: str, payload) -> None:
    path = OUT_DIR / f"{name}.json"
    path.write_text(json.dumps(payload, ensure_ascii=False, indent=2) + "\n",
                    encoding="utf-8")
    print(f"wrote {path.relative_to(Path.cwd())}")


def create(client, **overrides):
    body = {
        "learnerId": "ui-lea",
        "packId": "ko-canonical-1",
        "level": "Basic",
        "category": "alphabet",
        "seed": 7,
    }
    body.update(overrides)
    response = client.post("/v1/sessions", json=body)
    assert response.status_code == 201, response.text
    return response.json()


def step_until_quiz(client, session_id, first_step):
    steps = [first_step]
    while steps[-1]["type"] != "quiz":
        steps.append(client.get(f"/v1/sessions/{session_id}/step").json())
    return steps


def answer(client, session_id, question_doc, selected):
    response = client.post(
        f"/v1/sessions/{session_id}/answer",
        json={"questionId": question_doc["questionId"], "selectedIndex": selected},
    )
    assert response.status_code == 200, response.text
    return response.json()


def drive_to_completion(client, pack, session_id, first_step, *, pattern):
    """Finish a session from its current position; returns (steps, answers)."""
    steps = [first_step]
    answers = []
    ordinal = itertools.count()
    while steps[-1]["type"] != "levelComplete":
        if steps[-1]["type"] == "quiz":
            question = steps[-1]["question"]
            selected = (
                correct_index(pack, question)
                if pattern(next(ordinal))
                else wrong_index(pack, question)
            )
            answers.append(answer(client, session_id, question, selected))
        response = client.get(f"/v1/sessions/{session_id}/step")
        if steps[-1]["type"] == "categoryComplete" and response.status_code == 410:
            break
        assert response.status_code == 200, response.text
        steps.append(response.json())
    return steps, answers


def main() -> None:
    OUT_DIR.mkdir(exist_ok=True)
    ko = fixtures.korean_canonical_pack()
    es = fixtures.spanish_minimal_pack()
    counter = itertools.count()
    store = ProgressStore(
        Path("/tmp/lexitrain-fixture-recording"),
        clock=lambda: float(next(counter)),
    )
    import shutil

    shutil.rmtree("/tmp/lexitrain-fixture-recording", ignore_errors=True)
    app = create_app({ko.pack_id: ko, es.pack_id: es}, store)
    client = TestClient(app)

    write("packs", client.get("/v1/packs").json())

    # KR immediate: first card, first quiz, one green and one red verdict.
    created = create(client)
    session_id = created["sessionId"]
    write("present_step", created["firstStep"])
    steps = step_until_quiz(client, session_id, created["firstStep"])
    quiz_step = steps[-1]
    write("quiz_step", quiz_step)
    write(
        "answer_correct_kr",
        answer(client, session_id, quiz_step["question"], correct_index(ko, quiz_step["question"])),
    )
    second_quiz = client.get(f"/v1/sessions/{session_id}/step").json()
    write(
        "answer_wrong_kr",
        answer(client, session_id, second_quiz["question"], wrong_index(ko, second_quiz["question"])),
    )
    drive_to_completion(
        client, ko, session_id,
        client.get(f"/v1/sessions/{session_id}/step").json(),
        pattern=lambda i: True,
    )
    write("report", client.get(f"/v1/sessions/{session_id}/report").json())

    # KCR immediate: a miss that carries the correct translation.
    created = create(client, learnerId="ui-kcr", category="numbering", seed=9,
                     modality={"type": "KCR", "level": "Task", "timing": "Immediate"})
    session_id = created["sessionId"]
    steps = step_until_quiz(client, session_id, created["firstStep"])
    write(
        "answer_wrong_kcr",
        answer(client, session_id, steps[-1]["question"], wrong_index(ko, steps[-1]["question"])),
    )

    # Delayed KCR: the three answer responses of one full block.
    created = create(client, learnerId="ui-delayed", seed=11,
                     modality={"type": "KCR", "level": "Task", "timing": "Delayed"})
    session_id = created["sessionId"]
    steps = step_until_quiz(client, session_id, created["firstStep"])
    block_answers = []
    outcomes = [True, False, True]
    current = steps[-1]
    for i, outcome in enumerate(outcomes):
        question = current["question"]
        selected = correct_index(ko, question) if outcome else wrong_index(ko, question)
        block_answers.append(answer(client, session_id, question, selected))
        if i < len(outcomes) - 1:
            current = client.get(f"/v1/sessions/{session_id}/step").json()
    write("delayed_block_answers", block_answers)

    # Newbie report: quiz toggle off, nothing asked.
    created = create(client, learnerId="ui-newbie", category="numbering", seed=3,
                     policy={"blockSize": 5, "quizLength": 3, "quizToggle": False})
    session_id = created["sessionId"]
    current = created["firstStep"]
    while current["type"] != "categoryComplete":
        current = client.get(f"/v1/sessions/{session_id}/step").json()
    write("report_newbie", client.get(f"/v1/sessions/{session_id}/report").json())

    # Finish both Basic categories to capture the level review list and
    # the unlocked progress document.
    created = create(client, learnerId="ui-adv", seed=21)
    steps, _ = drive_to_completion(
        client, ko, created["sessionId"], created["firstStep"], pattern=lambda i: True
    )
    created = create(client, learnerId="ui-adv", category="numbering", seed=22)
    steps, _ = drive_to_completion(
        client, ko, created["sessionId"], created["firstStep"], pattern=lambda i: True
    )
    assert steps[-1]["type"] == "levelComplete"
    write("level_complete", steps[-1])
    write("progress", client.get("/v1/learners/ui-adv/progress").json())

    # A locked level, straight from the server.
    locked = client.post("/v1/sessions", json={
        "learnerId": "ui-fresh", "packId": ko.pack_id,
        "level": "Intermediate", "category": "pronouns",
    })
    assert locked.status_code == 409
    write("locked_error", locked.json())

    # A minimal card without mnemonic or audio.
    created = create(client, learnerId="ui-min", packId=es.pack_id,
                     category="numbers",
                     policy={"blockSize": 5, "quizLength": 3, "quizToggle": False})
    write("present_step_minimal", created["firstStep"])


if __name__ == "__main__":
    main()
