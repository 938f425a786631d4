import json
import logging
from importlib import resources
from pathlib import Path

from pydantic import ValidationError

from regsym.errors import FixtureFormatError
from regsym.models.fixture import Fixture

logger = logging.getLogger(__name__)

BUNDLED_FIXTURES = "reference_operators.json"


class FixtureParser:
    """Namespace for the parser functions of fixture files.

    A fixture file is a JSON array of objects with the keys ``name``, ``symbol``, ``quantization`` (optional),
    ``expected`` and ``notes`` (optional).

    Methods
    -------
    fixture_parser(dct:dict, index:int) -> Fixture
        Parse and validate a single entry of a fixture file.
    parse_text(text:str) -> list[Fixture]
        Parse the contents of a fixture file.
    parse_file(path:str | Path) -> list[Fixture]
        Read and parse a fixture file.
    """

    def fixture_parser(self, dct: dict, index: int = 0) -> Fixture:
        """
        Parse and validate a single entry of a fixture file.

        Parameters
        ----------
        dct : dict
            A dictionary representing a single fixture.
        index : int
            Position of the entry, for error messages.
        """
        if not isinstance(dct, dict):
            raise FixtureFormatError(f"entry {index} is not an object")
        dct["quantization"] = dct.get("quantization") or "weyl"
        try:
            return Fixture.model_validate(dct)
        except ValidationError as e:
            name = dct.get("name", f"#{index}")
            raise FixtureFormatError(f"entry {name!r}: {e.errors()[0]['msg']}") from e

    def parse_text(self, text: str) -> list[Fixture]:
        """
        Parse the contents of a fixture file.

        Parameters
        ----------
        text : str
            JSON text holding an array of fixture objects.
        """
        try:
            data = json.loads(text)
        except json.JSONDecodeError as e:
            raise FixtureFormatError(f"not valid JSON: {e}") from e
        if not isinstance(data, list):
            raise FixtureFormatError("a fixture file must hold a JSON array")
        fixtures = [self.fixture_parser(dct, index) for index, dct in enumerate(data)]
        names = [fixture.name for fixture in fixtures]
        duplicates = sorted({name for name in names if names.count(name) > 1})
        if duplicates:
            raise FixtureFormatError(f"duplicate fixture names: {duplicates}")
        return fixtures

    def parse_file(self, path: str | Path) -> list[Fixture]:
        """
        Read and parse a fixture file.

        Parameters
        ----------
        path : str | Path
            Location of the fixture file.
        """
        try:
            text = Path(path).read_text(encoding="utf-8")
        except OSError as e:
            raise FixtureFormatError(f"cannot read {path}: {e}") from e
        fixtures = self.parse_text(text)
        logger.debug("read %d fixtures from %s", len(fixtures), path)
        return fixtures


def bundled_fixtures_path() -> Path:
    """Location of the fixture file shipped with the package."""
    return Path(str(resources.files("regsym").joinpath("fixtures", BUNDLED_FIXTURES)))
