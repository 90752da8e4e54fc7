"""Tests unitaires pour la hiérarchie d'exceptions et les codes de sortie"""

from nlfm.core.errors import (
    EXIT_CONFIG,
    EXIT_IO,
    EXIT_NUMERICAL,
    AliasingError,
    ConfigError,
    DegenerateMainlobeError,
    InvalidParameterError,
    NumericalError,
    OutOfDomainError,
    error_document,
    exit_code_for,
)


class TestExitCodes:
    """Tests pour exit_code_for()."""

    def test_parameter_errors(self):
        assert exit_code_for(ConfigError("x")) == EXIT_CONFIG
        assert exit_code_for(AliasingError("x")) == EXIT_CONFIG

    def test_numerical_errors(self):
        assert exit_code_for(NumericalError("x")) == EXIT_NUMERICAL
        assert exit_code_for(OutOfDomainError("x")) == EXIT_NUMERICAL
        assert exit_code_for(DegenerateMainlobeError("x")) == EXIT_NUMERICAL

    def test_io_error(self):
        assert exit_code_for(FileNotFoundError("absent.conf")) == EXIT_IO

    def test_unexpected_error(self):
        assert exit_code_for(RuntimeError("boom")) == EXIT_NUMERICAL

    def test_builtin_compatibility(self):
        """Test que les erreurs de paramètre restent des ValueError."""
        assert isinstance(AliasingError("x"), ValueError)
        assert isinstance(AliasingError("x"), InvalidParameterError)
        assert isinstance(NumericalError("x"), ArithmeticError)


class TestErrorDocument:
    """Tests pour error_document()."""

    def test_nlfm_error(self):
        document = error_document(AliasingError("fs <= B"))
        assert document == {"error": "AliasingError", "message": "fs <= B", "exit_code": 2}

    def test_os_error(self):
        document = error_document(PermissionError("lecture seule"))
        assert document["error"] == "PermissionError"
        assert document["exit_code"] == 4
