"""Stateful exploration service over HTTP + JSON.

Sessions pair a seed with a framed matrix, mutated in lockstep; history replay
from the initial state reproduces the current state, which is what undo uses.
Sessions live in memory behind an LRU cap; requests to one session serialize
on its lock while distinct sessions proceed concurrently.
"""

import json
import re
import secrets
import threading
from collections import OrderedDict
from http.server import BaseHTTPRequestHandler, ThreadingHTTPServer
from pathlib import Path

from quiverlab import mgs, seed
from quiverlab.errors import QuiverLabError
from quiverlab.quiver import Quiver, to_exchange_matrix

MAX_SESSIONS = 256
TRUNCATE_AT = 400


class Session:
    def __init__(self, quiver):
        self.quiver = quiver
        self.lock = threading.Lock()
        self.history = []
        self.last_green = None
        self._reset()

    def _reset(self):
        self.seed = seed.initial_seed(self.quiver)
        self.framed = mgs.framed(to_exchange_matrix(self.quiver))

    def mutate(self, vertex):
        green = vertex in mgs.green_vertices(self.framed)
        self.seed = seed.mutate_seed(self.seed, vertex)
        self.framed = mgs.mutate_framed(self.framed, vertex)
        self.history.append(vertex)
        self.last_green = green
        return green

    def undo(self):
        directions = self.history[:-1]
        self._reset()
        self.history = []
        self.last_green = None
        for k in directions:
            self.mutate(k)
        if not directions:
            self.last_green = None

    def state(self, session_id):
        greens = sorted(mgs.green_vertices(self.framed))
        reds = sorted(mgs.red_vertices(self.framed))
        cluster = []
        for poly in self.seed.cluster:
            text = poly.render("display")
            truncated = len(text) > TRUNCATE_AT
            cluster.append(
                {
                    "text": text[:TRUNCATE_AT],
                    "truncated": truncated,
                }
            )
        # Current quiver arrows, read off the mutated exchange matrix.
        arrows = []
        top = self.framed.top
        n = self.quiver.n
        for i in range(n):
            for j in range(n):
                if top[i][j] > 0:
                    arrows.extend([[i + 1, j + 1]] * top[i][j])
        return {
            "id": session_id,
            "n": n,
            "arrows": arrows,
            "green": greens,
            "red": reds,
            "cluster": cluster,
            "history": list(self.history),
            "mgs_done": not greens,
            "green_move": self.last_green,
        }


class SessionStore:
    def __init__(self):
        self._lock = threading.Lock()
        self._sessions = OrderedDict()

    def create(self, quiver):
        session = Session(quiver)
        session_id = secrets.token_hex(8)
        with self._lock:
            self._sessions[session_id] = session
            while len(self._sessions) > MAX_SESSIONS:
                self._sessions.popitem(last=False)
        return session_id, session

    def get(self, session_id):
        with self._lock:
            session = self._sessions.get(session_id)
            if session is not None:
                self._sessions.move_to_end(session_id)
            return session


def make_handler(store, static_dir=None):
    static_root = Path(static_dir).resolve() if static_dir else None

    class Handler(BaseHTTPRequestHandler):
        def log_message(self, fmt, *args):  # silence default stderr chatter
            pass

        def _send(self, status, payload):
            body = json.dumps(payload).encode()
            self.send_response(status)
            self.send_header("Content-Type", "application/json")
            self.send_header("Content-Length", str(len(body)))
            self.end_headers()
            self.wfile.write(body)

        def _error(self, status, message):
            self._send(status, {"error": message})

        def _read_json(self):
            length = int(self.headers.get("Content-Length") or 0)
            if not length:
                return {}
            try:
                return json.loads(self.rfile.read(length))
            except json.JSONDecodeError:
                return None

        def _with_session(self, session_id, fn):
            session = store.get(session_id)
            if session is None:
                self._error(404, f"unknown session {session_id}")
                return
            with session.lock:
                fn(session)

        def do_POST(self):
            if self.path == "/session":
                data = self._read_json()
                if data is None:
                    self._error(400, "invalid JSON body")
                    return
                try:
                    quiver = Quiver.from_json(json.dumps(data))
                except (QuiverLabError, KeyError, TypeError) as exc:
                    self._error(400, f"invalid quiver: {exc}")
                    return
                session_id, session = store.create(quiver)
                with session.lock:
                    self._send(200, session.state(session_id))
                return
            match = re.fullmatch(r"/session/([0-9a-f]+)/mutate", self.path)
            if match:
                data = self._read_json()
                if data is None or "vertex" not in data:
                    self._error(400, "body must be {\"vertex\": k}")
                    return
                session_id = match.group(1)

                def run(session):
                    vertex = data["vertex"]
                    if not isinstance(vertex, int) or not 1 <= vertex <= session.quiver.n:
                        self._error(400, f"bad vertex {vertex!r}")
                        return
                    session.mutate(vertex)
                    self._send(200, session.state(session_id))

                self._with_session(session_id, run)
                return
            match = re.fullmatch(r"/session/([0-9a-f]+)/undo", self.path)
            if match:
                session_id = match.group(1)

                def run(session):
                    if not session.history:
                        self._error(409, "history is empty")
                        return
                    session.undo()
                    self._send(200, session.state(session_id))

                self._with_session(session_id, run)
                return
            self._error(404, f"no such endpoint {self.path}")

        def do_GET(self):
            match = re.fullmatch(r"/session/([0-9a-f]+)", self.path)
            if match:
                session_id = match.group(1)
                self._with_session(
                    session_id, lambda s: self._send(200, s.state(session_id))
                )
                return
            match = re.fullmatch(r"/session/([0-9a-f]+)/hint", self.path)
            if match:
                self._with_session(
                    match.group(1),
                    lambda s: self._send(
                        200, {"green": sorted(mgs.green_vertices(s.framed))}
                    ),
                )
                return
            match = re.fullmatch(r"/session/([0-9a-f]+)/variable/(\d+)", self.path)
            if match:
                session_id, idx = match.group(1), int(match.group(2))

                def run(session):
                    if not 1 <= idx <= session.quiver.n:
                        self._error(400, f"bad variable index {idx}")
                        return
                    self._send(
                        200,
                        {"text": session.seed.cluster[idx - 1].render("display")},
                    )

                self._with_session(session_id, run)
                return
            if static_root is not None:
                self._serve_static()
                return
            self._error(404, f"no such endpoint {self.path}")

        def _serve_static(self):
            rel = self.path.lstrip("/") or "index.html"
            target = (static_root / rel).resolve()
            if not str(target).startswith(str(static_root)) or not target.is_file():
                self._error(404, f"no such file {self.path}")
                return
            content_types = {
                ".html": "text/html",
                ".js": "text/javascript",
                ".css": "text/css",
                ".svg": "image/svg+xml",
            }
            body = target.read_bytes()
            self.send_response(200)
            self.send_header(
                "Content-Type", content_types.get(target.suffix, "application/octet-stream")
            )
            self.send_header("Content-Length", str(len(body)))
            self.end_headers()
            self.wfile.write(body)

    return Handler


def make_server(host="127.0.0.1", port=0, static_dir=None):
    store = SessionStore()
    server = ThreadingHTTPServer((host, port), make_handler(store, static_dir))
    server.store = store
    return server


def run_server(host, port, static_dir=None):
    server = make_server(host, port, static_dir)
    print(
        f"quiverlab service on http://{host}:{server.server_address[1]}",
        flush=True,
    )
    try:
        server.serve_forever()
    except KeyboardInterrupt:
        server.shutdown()
