"""
Utility functions for the quaternary Hermitian LCD code toolkit
"""

import json
import logging
import os
import platform
from datetime import datetime
from typing import Any, Dict, List, Optional

import psutil

LOG_FORMAT = '%(asctime)s - %(name)s - %(levelname)s - %(message)s'
LOG_LEVELS = ("DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL")


def setup_logging(log_level: str = "INFO", log_file: Optional[str] = None,
                  log_format: str = LOG_FORMAT) -> logging.Logger:
    """
    Setup logging configuration

    Args:
        log_level: Logging level
        log_file: Optional file receiving a copy of the log
        log_format: Record format

    Returns:
        Logger instance
    """
    if log_level.upper() not in LOG_LEVELS:
        raise ValueError(f"Unknown log level {log_level!r}; expected one of {', '.join(LOG_LEVELS)}")
    handlers: List[logging.Handler] = [logging.StreamHandler()]
    if log_file:
        handlers.append(logging.FileHandler(log_file))
    logging.basicConfig(
        level=getattr(logging, log_level.upper()),
        format=log_format,
        handlers=handlers,
        force=True,
    )
    return logging.getLogger(__name__)


def get_system_info() -> Dict[str, Any]:
    """
    Get system information

    Returns:
        Dictionary with platform, CPU and memory details
    """
    memory = psutil.virtual_memory()
    return {
        "platform": platform.platform(),
        "python": platform.python_version(),
        "cpu_physical": psutil.cpu_count(logical=False),
        "cpu_logical": psutil.cpu_count(logical=True),
        "memory_total": format_bytes(memory.total),
        "memory_available": format_bytes(memory.available),
    }


def resolve_jobs(jobs: int) -> int:
    """
    Resolve a requested worker count; 0 means one per physical core

    Args:
        jobs: Requested count

    Returns:
        Positive worker count
    """
    if jobs < 0:
        raise ValueError(f"Worker count must be >= 0, got {jobs}")
    if jobs == 0:
        return psutil.cpu_count(logical=False) or psutil.cpu_count() or 1
    return jobs


def format_bytes(size_bytes: int) -> str:
    """
    Format a byte count in human readable form

    Args:
        size_bytes: Size in bytes

    Returns:
        Formatted size string
    """
    if size_bytes == 0:
        return "0 B"

    size_names = ["B", "KB", "MB", "GB", "TB"]
    i = 0
    size = float(size_bytes)
    while size >= 1024 and i < len(size_names) - 1:
        size /= 1024
        i += 1

    return f"{size:.1f} {size_names[i]}"


def format_duration(seconds: float) -> str:
    """Format elapsed seconds as e.g. '1h 02m 03.4s'"""
    minutes, secs = divmod(seconds, 60)
    hours, minutes = divmod(int(minutes), 60)
    if hours:
        return f"{hours}h {minutes:02d}m {secs:04.1f}s"
    if minutes:
        return f"{minutes}m {secs:04.1f}s"
    return f"{secs:.2f}s"


def save_json_report(payload: Any, filename: str = None, directory: str = "data/reports") -> str:
    """
    Save a report to a JSON file

    Args:
        payload: JSON-serializable report
        filename: Optional custom filename
        directory: Target directory

    Returns:
        Path to saved file
    """
    if filename is None:
        timestamp = datetime.now().strftime("%Y%m%d_%H%M%S")
        filename = f"report_{timestamp}.json"

    filepath = os.path.join(directory, filename)
    os.makedirs(os.path.dirname(filepath), exist_ok=True)

    with open(filepath, 'w', encoding='utf-8') as f:
        json.dump(payload, f, ensure_ascii=False, indent=2)

    return filepath
