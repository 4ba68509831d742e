"""Content-addressed disk cache for theta coefficient vectors.

Files are JSON {"formHash", "prec", "checksum", "coeffs"} keyed by the
canonical reduced form, so isometric inputs share entries.  A stored
vector with larger precision serves smaller requests by truncation;
corrupted files are detected by checksum and recomputed.
"""

from __future__ import annotations

import hashlib
import json
import logging
import os
import tempfile
from pathlib import Path

from .forms import QuadForm
from .reduction import canonical_form
from .theta import theta_coeffs

log = logging.getLogger(__name__)

ENV_VAR = "QFLAB_CACHE"


def resolve_cache_dir(explicit: str | os.PathLike | None = None) -> Path | None:
    """Explicit argument wins, then the QFLAB_CACHE environment variable."""
    if explicit is not None:
        return Path(explicit)
    env = os.environ.get(ENV_VAR)
    return Path(env) if env else None


def form_hash(form: QuadForm) -> str:
    canonical = canonical_form(form)
    payload = json.dumps(canonical.hessian).encode()
    return hashlib.sha256(payload).hexdigest()


def _checksum(coeffs) -> str:
    return hashlib.sha256(json.dumps(list(coeffs)).encode()).hexdigest()


def cache_theta(form: QuadForm, prec: int,
                cache_dir: str | os.PathLike | None = None) -> list[int]:
    """Theta coefficients through prec, loaded from or stored to the cache
    directory (no directory resolved: plain recomputation)."""
    directory = resolve_cache_dir(cache_dir)
    if directory is None:
        return theta_coeffs(form, prec)
    directory.mkdir(parents=True, exist_ok=True)
    key = form_hash(form)
    path = directory / f"theta-{key}.json"
    if path.exists():
        try:
            data = json.loads(path.read_text())
            if (data.get("formHash") == key
                    and data.get("checksum") == _checksum(data["coeffs"])
                    and data.get("prec") == len(data["coeffs"]) - 1):
                if data["prec"] >= prec:
                    return [int(c) for c in data["coeffs"][:prec + 1]]
            else:
                log.warning("theta cache entry %s is corrupted; recomputing",
                            path.name)
        except (ValueError, KeyError, OSError):
            log.warning("theta cache entry %s is unreadable; recomputing",
                        path.name)
    coeffs = theta_coeffs(form, prec)
    payload = {
        "formHash": key,
        "prec": prec,
        "checksum": _checksum(coeffs),
        "coeffs": coeffs,
    }
    fd, tmp = tempfile.mkstemp(dir=directory, suffix=".tmp")
    try:
        with os.fdopen(fd, "w") as handle:
            json.dump(payload, handle)
        os.replace(tmp, path)
    except OSError:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise
    return list(coeffs)


def make_cache(cache_dir: str | os.PathLike | None):
    """Adapter with the (form, prec) -> coeffs signature RepQuery expects,
    or None when no cache directory is configured."""
    directory = resolve_cache_dir(cache_dir)
    if directory is None:
        return None

    def lookup(form: QuadForm, prec: int) -> list[int]:
        return cache_theta(form, prec, directory)

    return lookup
