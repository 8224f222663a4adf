"""Stateless JSON API over HTTP for the goban UI and scripting.

Endpoints:
  GET /api/locus?stones=x1,y1;...&k=K&board=N  -> region document
  GET /api/anticode?model=M&kind=K&d=D         -> region document
  GET /api/dispersion?model=M&points=...       -> {"value": n}

Every handler is pure over its query string, so concurrent requests need
no coordination.  Domain errors map to HTTP 400 with a machine-readable
code; unknown paths to 404.  Responses carry a permissive CORS header so
a separately served UI can call the API.  With a static directory the
server also serves files for non-API paths.
"""

from __future__ import annotations

import json
import sys
from http import HTTPStatus
from http.server import BaseHTTPRequestHandler, ThreadingHTTPServer
from mimetypes import guess_type
from pathlib import Path
from urllib.parse import parse_qs, urlparse

from .anticodes import AnticodeKind, AnticodeSpec, optimal_anticode
from .dispersion import dispersion_diameter, dispersion_oracle
from .document import RegionDocument, document_to_json, locus_document
from .lattice import DomainError, Model, parse_points

__all__ = ["make_server", "run_server"]


def _int_param(params: dict, name: str, default: int | None = None) -> int:
    if name not in params:
        if default is None:
            raise KeyError(name)
        return default
    try:
        return int(params[name][0])
    except ValueError:
        raise DomainError(f"parameter {name} must be an integer") from None


def _api_locus(params: dict) -> str:
    doc = locus_document(params.get("stones", [""])[0],
                         _int_param(params, "k", 0),
                         _int_param(params, "board", 19))
    return document_to_json(doc)


def _api_anticode(params: dict) -> str:
    spec = AnticodeSpec(Model.parse(params["model"][0]),
                        AnticodeKind.parse(params["kind"][0]),
                        _int_param(params, "d"))
    doc = RegionDocument.from_solution(optimal_anticode(spec), spec.kind,
                                       spec.diameter)
    return document_to_json(doc)


def _api_dispersion(params: dict) -> str:
    model = Model.parse(params["model"][0])
    points = parse_points(model, params["points"][0])
    if not 2 <= len(points) <= 5:
        raise DomainError("dispersion takes between 2 and 5 points")
    try:
        value = dispersion_diameter(model, len(points), points)
    except DomainError:
        value = dispersion_oracle(model, points)
    return json.dumps({"value": int(value)}) + "\n"


_ROUTES = {
    "/api/locus": _api_locus,
    "/api/anticode": _api_anticode,
    "/api/dispersion": _api_dispersion,
}


class _Handler(BaseHTTPRequestHandler):
    static_dir: Path | None = None
    quiet = True

    def _send(self, status: HTTPStatus, body: bytes,
              content_type: str = "application/json") -> None:
        self.send_response(status)
        self.send_header("Content-Type", content_type)
        self.send_header("Content-Length", str(len(body)))
        self.send_header("Access-Control-Allow-Origin", "*")
        self.end_headers()
        self.wfile.write(body)

    def _send_error_doc(self, status: HTTPStatus, code: str,
                        detail: str) -> None:
        body = json.dumps({"error": code, "detail": detail}) + "\n"
        self._send(status, body.encode())

    def do_OPTIONS(self):  # noqa: N802  (stdlib handler naming)
        self.send_response(HTTPStatus.NO_CONTENT)
        self.send_header("Access-Control-Allow-Origin", "*")
        self.send_header("Access-Control-Allow-Methods", "GET, OPTIONS")
        self.send_header("Access-Control-Allow-Headers", "Content-Type")
        self.end_headers()

    def do_GET(self):  # noqa: N802
        url = urlparse(self.path)
        handler = _ROUTES.get(url.path)
        if handler is not None:
            try:
                body = handler(parse_qs(url.query))
            except KeyError as exc:
                self._send_error_doc(HTTPStatus.BAD_REQUEST, "usage-error",
                                     f"missing query parameter {exc}")
            except DomainError as exc:
                self._send_error_doc(HTTPStatus.BAD_REQUEST, "domain-error",
                                     str(exc))
            else:
                self._send(HTTPStatus.OK, body.encode())
            return
        if self.static_dir is not None and not url.path.startswith("/api/"):
            self._send_static(url.path)
            return
        self._send_error_doc(HTTPStatus.NOT_FOUND, "not-found",
                             f"no route for {url.path}")

    def _send_static(self, path: str) -> None:
        rel = path.lstrip("/") or "index.html"
        target = (self.static_dir / rel).resolve()
        root = self.static_dir.resolve()
        if not target.is_relative_to(root) or not target.is_file():
            self._send_error_doc(HTTPStatus.NOT_FOUND, "not-found",
                                 f"no file for {path}")
            return
        ctype = guess_type(target.name)[0] or "application/octet-stream"
        self._send(HTTPStatus.OK, target.read_bytes(), ctype)

    def log_message(self, fmt, *args):
        if not self.quiet:
            super().log_message(fmt, *args)


def make_server(host: str = "127.0.0.1", port: int = 8000,
                static_dir: str | None = None,
                quiet: bool = True) -> ThreadingHTTPServer:
    handler = type("Handler", (_Handler,), {
        "static_dir": Path(static_dir) if static_dir else None,
        "quiet": quiet,
    })
    return ThreadingHTTPServer((host, port), handler)


def run_server(host: str = "127.0.0.1", port: int = 8000,
               static_dir: str | None = None) -> None:
    server = make_server(host, port, static_dir, quiet=False)
    print(f"serving on http://{host}:{server.server_address[1]}/",
          file=sys.stderr)
    try:
        server.serve_forever()
    except KeyboardInterrupt:
        server.shutdown()
