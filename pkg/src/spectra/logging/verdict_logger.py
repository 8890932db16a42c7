from __future__ import annotations

import json
from datetime import datetime, timezone
from pathlib import Path
from typing import Any, Dict, Optional


def _utc_now_iso() -> str:
    return datetime.now(timezone.utc).isoformat()


class VerdictLogger:
    """Structured verdict logger writing newline-delimited JSON."""

    def __init__(self, log_path: Path):
        self.log_path = Path(log_path)
        self.log_path.parent.mkdir(parents=True, exist_ok=True)

    def log_verdict(
        self,
        *,
        command: str,
        subject: str,
        n: int,
        verdict: str,
        method: Optional[str] = None,
        seconds: Optional[float] = None,
        details: Optional[Dict[str, Any]] = None,
    ) -> None:
        payload: Dict[str, Any] = {
            "timestamp": _utc_now_iso(),
            "command": command,
            "subject": subject,
            "n": n,
            "verdict": verdict,
        }
        if method is not None:
            payload["method"] = method
        if seconds is not None:
            payload["seconds"] = round(seconds, 6)
        if details:
            payload["details"] = details

        with self.log_path.open("a", encoding="utf-8") as handle:
            handle.write(json.dumps(payload, sort_keys=True))
            handle.write("\n")
