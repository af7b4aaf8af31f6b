import contextlib
import io

import pytest

from numonoid.cli import main


@pytest.fixture
def cli():
    """Run the CLI in-process; returns (exit_code, stdout_text)."""

    def run(*argv):
        buf = io.StringIO()
        with contextlib.redirect_stdout(buf):
            code = main(list(argv))
        return code, buf.getvalue()

    return run
