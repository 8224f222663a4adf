"""HTTP API behavior: routes, errors, CORS, and CLI parity."""

import json
import threading
import urllib.error
import urllib.request
from concurrent.futures import ThreadPoolExecutor

import pytest

from latdisp.cli import main
from latdisp.serve import make_server


@pytest.fixture(scope="module")
def server_port():
    server = make_server(port=0)
    thread = threading.Thread(target=server.serve_forever, daemon=True)
    thread.start()
    yield server.server_address[1]
    server.shutdown()


def get(port, path):
    with urllib.request.urlopen(f"http://127.0.0.1:{port}{path}") as resp:
        return resp.status, resp.read(), dict(resp.headers)


def get_error(port, path):
    with pytest.raises(urllib.error.HTTPError) as exc:
        get(port, path)
    return exc.value.code, json.loads(exc.value.read())


def test_locus_endpoint(server_port):
    status, body, headers = get(server_port, "/api/locus?stones=9,9&k=2")
    assert status == 200
    assert headers["Content-Type"] == "application/json"
    assert json.loads(body)["size"] == 13


def test_dispersion_endpoint(server_port):
    status, body, _ = get(server_port,
                          "/api/dispersion?model=hex2&points=0,0;2,0;0,2")
    assert status == 200
    assert json.loads(body) == {"value": 4}


def test_anticode_endpoint(server_port):
    status, body, _ = get(server_port,
                          "/api/anticode?model=inf2&kind=tristance&d=2")
    assert status == 200
    assert json.loads(body)["size"] == 5


def test_serve_matches_cli_byte_for_byte(server_port, capsys):
    _, body, _ = get(server_port, "/api/locus?stones=4,4;8,6&k=3&board=19")
    assert main(["go-locus", "--stones", "4,4;8,6", "--k", "3",
                 "--board", "19"]) == 0
    assert capsys.readouterr().out.encode() == body

    _, body, _ = get(server_port,
                     "/api/anticode?model=grid3&kind=tristance&d=5")
    assert main(["anticode", "--model", "grid3", "--kind", "tristance",
                 "--diameter", "5", "--format", "json"]) == 0
    assert capsys.readouterr().out.encode() == body


def test_domain_error_is_400_with_code(server_port):
    code, payload = get_error(server_port,
                              "/api/anticode?model=grid9&kind=tristance&d=2")
    assert code == 400 and payload["error"] == "domain-error"
    code, payload = get_error(server_port, "/api/locus?stones=9,9&k=-1")
    assert code == 400 and payload["error"] == "domain-error"


def test_missing_parameter_is_400_usage(server_port):
    code, payload = get_error(server_port, "/api/anticode?kind=tristance&d=2")
    assert code == 400 and payload["error"] == "usage-error"
    code, payload = get_error(server_port, "/api/anticode?model=grid2&kind=tristance&d=x")
    assert code == 400 and payload["error"] == "domain-error"


def test_unknown_path_is_404(server_port):
    code, payload = get_error(server_port, "/api/nope")
    assert code == 404 and payload["error"] == "not-found"
    code, _ = get_error(server_port, "/outside")
    assert code == 404


def test_cors_headers_present(server_port):
    _, _, headers = get(server_port, "/api/dispersion?model=grid2&points=0,0;1,1")
    assert headers["Access-Control-Allow-Origin"] == "*"
    req = urllib.request.Request(
        f"http://127.0.0.1:{server_port}/api/locus", method="OPTIONS")
    with urllib.request.urlopen(req) as resp:
        assert resp.status == 204
        assert resp.headers["Access-Control-Allow-Methods"] == "GET, OPTIONS"


def test_concurrent_requests_agree(server_port):
    paths = [f"/api/locus?stones=9,9&k={k}" for k in range(8)] * 3
    with ThreadPoolExecutor(max_workers=6) as pool:
        results = list(pool.map(lambda p: get(server_port, p), paths))
    assert all(status == 200 for status, _, _ in results)
    by_path = {}
    for path, (_, body, _) in zip(paths, results):
        assert by_path.setdefault(path, body) == body


def test_static_directory_serving(tmp_path):
    (tmp_path / "index.html").write_text("<html>goban</html>")
    (tmp_path / "app.js").write_text("console.log(1)")
    server = make_server(port=0, static_dir=str(tmp_path))
    thread = threading.Thread(target=server.serve_forever, daemon=True)
    thread.start()
    port = server.server_address[1]
    try:
        status, body, headers = get(port, "/")
        assert status == 200 and b"goban" in body
        assert headers["Content-Type"].startswith("text/html")
        status, _, headers = get(port, "/app.js")
        assert status == 200
        code, _ = get_error(port, "/missing.css")
        assert code == 404
        code, _ = get_error(port, "/../pyproject.toml")
        assert code == 404
        status, body, _ = get(port, "/api/dispersion?model=grid2&points=0,0;2,1")
        assert status == 200 and json.loads(body) == {"value": 3}
    finally:
        server.shutdown()
