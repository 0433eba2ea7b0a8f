"""Walk the blinded reader study protocol over real HTTP.

Starts the service on a local port, plays a scripted observer through all 55
trials with stdlib urllib, prints the confusion score, then shows that the
append-only event log replays to the same score.

Run from the repo root: python3 demos/06_reader_study.py
"""

import json
import threading
import time
import urllib.request
from pathlib import Path

import numpy as np
import uvicorn

from octgan.study import SessionStore, build_bundle, create_app, replay_log

PORT = 8723
BASE = f"http://127.0.0.1:{PORT}"

out_dir = Path(__file__).parent / "out" / "study_demo"
out_dir.mkdir(parents=True, exist_ok=True)

rng = np.random.default_rng(6)
real = rng.uniform(-1, 1, (30, 64, 64)).astype(np.float32)
generated = rng.uniform(-1, 1, (30, 64, 64)).astype(np.float32)
store = SessionStore(out_dir / "sessions")
app = create_app(build_bundle(real, generated, seed=0), store)

config = uvicorn.Config(app, host="127.0.0.1", port=PORT, log_level="warning")
server = uvicorn.Server(config)
thread = threading.Thread(target=server.run, daemon=True)
thread.start()
while not server.started:
    time.sleep(0.05)


def call(method, path, body=None):
    data = json.dumps(body).encode() if body is not None else None
    req = urllib.request.Request(BASE + path, data=data, method=method,
                                 headers={"Content-Type": "application/json"})
    with urllib.request.urlopen(req) as resp:
        return json.loads(resp.read())


session = call("POST", "/sessions", {"mode": "unpaired", "seed": 0})
sid = session["session_id"]
print(f"session {sid}: {session['total_trials']} trials "
      f"({session['practice_trials']} practice), {session['display_seconds']}s display")

answered = 0
while True:
    trial = call("GET", f"/sessions/{sid}/trials/next")
    if trial["done"]:
        break
    # the scripted observer just guesses; a human would look at the image
    answer = trial["choices"][int(rng.integers(2))]
    reply = call("POST", f"/sessions/{sid}/answers",
                 {"trial_index": trial["trial_index"], "answer": answer,
                  "response_time_ms": float(rng.integers(400, 1900))})
    answered += 1
    if reply["practice"]:
        print(f"  practice trial {trial['trial_index']}: "
              f"{'correct' if reply['correct'] else 'wrong'}")

score = call("GET", f"/sessions/{sid}/score")
print(f"answered {answered}; confusion {score['confusion_percent']:.1f}% "
      f"({score['incorrect']}/{score['total']} wrong)")

replayed = replay_log(out_dir / "sessions" / f"session_{sid}.jsonl")
print(f"replayed from event log: {replayed.confusion_score():.1f}%")

server.should_exit = True
thread.join(timeout=5)
