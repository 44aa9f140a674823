"""
File operations for scheme documents.

Reads and writes report success or failure through FileOperationResult
rather than raising; ``load_scheme`` is the one entry point that raises,
since a caller asking for a scheme has nothing to fall back to.

Features:
- Atomic writes (temp file + replace)
- Optional timestamped backup of the previous file
- UTF-8 throughout
"""

import shutil
from dataclasses import dataclass, field
from datetime import datetime
from pathlib import Path
from typing import Optional, Union

from .exceptions import FileOpError
from .scheme import Scheme, deserialize, serialize


@dataclass
class FileOperationResult:
    """Result of a file operation.

    Attributes:
        success: Whether the operation succeeded
        content: File content (for read operations)
        filepath: The file that was operated on
        error: Error message if the operation failed
        metadata: Size, backup path and similar details
    """
    success: bool
    content: Optional[str] = None
    filepath: Optional[str] = None
    error: Optional[str] = None
    metadata: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {
            "success": self.success,
            "filepath": self.filepath,
            "error": self.error,
            "metadata": self.metadata,
            "has_content": self.content is not None,
        }


class FileOperations:
    """Plain-text file I/O for scheme documents and reports.

    Example:
        >>> ops = FileOperations()
        >>> ops.write_text("schemes/23-1.json", serialize(scheme)).success
        True
    """

    def __init__(self, encoding: str = "utf-8"):
        self.encoding = encoding

    def read_text(self, filepath: Union[str, Path]) -> FileOperationResult:
        path = Path(filepath)
        if not path.exists():
            return FileOperationResult(success=False, filepath=str(path), error=f"File not found: {path}")
        if not path.is_file():
            return FileOperationResult(success=False, filepath=str(path), error=f"Not a file: {path}")
        try:
            content = path.read_text(encoding=self.encoding)
        except (OSError, UnicodeDecodeError) as e:
            return FileOperationResult(
                success=False,
                filepath=str(path),
                error=f"Read failed: {type(e).__name__}: {e}",
            )
        return FileOperationResult(
            success=True,
            content=content,
            filepath=str(path),
            metadata={"size_bytes": path.stat().st_size, "encoding": self.encoding},
        )

    def write_text(self, filepath: Union[str, Path], content: str,
                   create_backup: bool = False) -> FileOperationResult:
        """Write ``content`` atomically, optionally backing up the old file first."""
        path = Path(filepath)
        try:
            path.parent.mkdir(parents=True, exist_ok=True)
            backup_path = None
            if create_backup and path.exists():
                backup = self.create_backup(path)
                if backup.success:
                    backup_path = backup.metadata["backup_path"]
            temp_path = path.with_suffix(path.suffix + ".tmp")
            temp_path.write_text(content, encoding=self.encoding)
            temp_path.replace(path)
        except OSError as e:
            return FileOperationResult(
                success=False,
                filepath=str(path),
                error=f"Write failed: {type(e).__name__}: {e}",
            )
        return FileOperationResult(
            success=True,
            filepath=str(path),
            metadata={
                "size_bytes": path.stat().st_size,
                "backup_created": backup_path is not None,
                "backup_path": backup_path,
            },
        )

    def create_backup(self, filepath: Union[str, Path]) -> FileOperationResult:
        """Copy a file to ``<name>.bak.<timestamp>``."""
        path = Path(filepath)
        if not path.exists():
            return FileOperationResult(success=False, filepath=str(path),
                                       error="Cannot backup: file does not exist")
        timestamp = datetime.now().strftime("%Y%m%d_%H%M%S")
        backup_path = path.with_suffix(f"{path.suffix}.bak.{timestamp}")
        try:
            shutil.copy2(path, backup_path)
        except OSError as e:
            return FileOperationResult(success=False, filepath=str(path),
                                       error=f"Backup failed: {type(e).__name__}: {e}")
        return FileOperationResult(
            success=True,
            filepath=str(path),
            metadata={"backup_path": str(backup_path), "timestamp": timestamp},
        )


def save_scheme(filepath: Union[str, Path], scheme: Scheme,
                create_backup: bool = False) -> FileOperationResult:
    """Write a scheme document."""
    return FileOperations().write_text(filepath, serialize(scheme) + "\n", create_backup)


def load_scheme(filepath: Union[str, Path]) -> Scheme:
    """Read a scheme document.

    Raises:
        FileOpError: If the file cannot be read
        SchemeError: If the document is malformed
    """
    result = FileOperations().read_text(filepath)
    if not result.success:
        raise FileOpError(result.error, filepath=str(filepath))
    return deserialize(result.content)
