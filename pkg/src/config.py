from pydantic import Field
from pydantic_settings import BaseSettings
from dotenv import load_dotenv

from src.models import QuadratureConfig

# Load environment variables from .env file
load_dotenv()

class AppConfig(BaseSettings):
    """Application configuration using Pydantic BaseSettings (env prefix FLUXHALF_)."""

    # Quadrature tolerances
    rel_tol: float = Field(default=1e-9)
    abs_tol: float = Field(default=1e-12)

    # Quadrature budgets
    radial_nodes: int = Field(default=96)
    angular_subdivision_limit: int = Field(default=40)
    oscillation_guard: int = Field(default=8)
    max_z_over_eta: float = Field(default=1e3)
    radial_rule: str = Field(default="laplace")  # "laplace" or "laguerre"

    # Sweep execution (FLUXHALF_THREADS)
    threads: int = Field(default=1)

    # Output
    units: str = Field(default="natural")  # "natural" or "si"
    output_format: str = Field(default="csv")  # "csv" or "json"
    figure_points: int = Field(default=2001)

    model_config = {
        "env_prefix": "FLUXHALF_",
        "env_file": ".env",
        "case_sensitive": False,
        "extra": "ignore"
    }

    def quadrature_config(self) -> QuadratureConfig:
        """Build the immutable quadrature settings used by the integrators."""
        return QuadratureConfig(
            rel_tol=self.rel_tol,
            abs_tol=self.abs_tol,
            radial_nodes=self.radial_nodes,
            angular_subdivision_limit=self.angular_subdivision_limit,
            oscillation_guard=self.oscillation_guard,
            max_z_over_eta=self.max_z_over_eta,
            radial_rule=self.radial_rule,
        )

def get_config(**overrides) -> AppConfig:
    """Get configuration from environment variables, with optional keyword overrides."""
    return AppConfig(**overrides)

def validate_config(config: AppConfig, verbose: bool = True) -> bool:
    """
    Validate that the configuration describes a runnable setup.

    Args:
        config: AppConfig instance to validate
        verbose: Print the outcome

    Returns:
        True if configuration is valid, False otherwise
    """
    problems = []
    if config.rel_tol <= 0:
        problems.append(f"FLUXHALF_REL_TOL must be > 0, got {config.rel_tol}")
    if config.abs_tol < 0:
        problems.append(f"FLUXHALF_ABS_TOL must be >= 0, got {config.abs_tol}")
    if config.radial_nodes < 8:
        problems.append(f"FLUXHALF_RADIAL_NODES must be >= 8, got {config.radial_nodes}")
    if config.oscillation_guard < 2:
        problems.append(f"FLUXHALF_OSCILLATION_GUARD must be >= 2, got {config.oscillation_guard}")
    if config.angular_subdivision_limit < 1:
        problems.append("FLUXHALF_ANGULAR_SUBDIVISION_LIMIT must be >= 1")
    if config.radial_rule not in RADIAL_RULES:
        problems.append(f"FLUXHALF_RADIAL_RULE must be one of {list(RADIAL_RULES)}, got '{config.radial_rule}'")
    if config.threads < 1:
        problems.append(f"FLUXHALF_THREADS must be >= 1, got {config.threads}")
    if config.units not in UNIT_SYSTEMS:
        problems.append(f"FLUXHALF_UNITS must be one of {list(UNIT_SYSTEMS)}, got '{config.units}'")
    if config.output_format not in OUTPUT_FORMATS:
        problems.append(f"FLUXHALF_OUTPUT_FORMAT must be one of {list(OUTPUT_FORMATS)}, got '{config.output_format}'")
    if config.figure_points < 2:
        problems.append("FLUXHALF_FIGURE_POINTS must be >= 2")

    if verbose:
        for problem in problems:
            print(f"❌ Error: {problem}")
        if not problems:
            print(f"✅ Configuration validated successfully (rule: {config.radial_rule}, threads: {config.threads})")
    return not problems

def print_config_summary(config: AppConfig) -> None:
    """
    Print a summary of the current configuration.

    Args:
        config: AppConfig instance to summarize
    """
    print("🚀 FluxHalf Configuration Summary")
    print("=" * 40)
    print(f"Relative tolerance: {config.rel_tol:g}")
    print(f"Absolute tolerance: {config.abs_tol:g}")
    print(f"Radial rule: {config.radial_rule} ({RADIAL_RULES.get(config.radial_rule, 'unknown')})")
    print(f"Radial nodes: {config.radial_nodes}")
    print(f"Angular subdivision limit: {config.angular_subdivision_limit}")
    print(f"Oscillation guard: {config.oscillation_guard} panels/period")
    print(f"Max z/eta: {config.max_z_over_eta:g}")
    print(f"Threads: {config.threads}")
    print(f"Units: {config.units}")
    print(f"Output format: {config.output_format}")
    print("=" * 40)

RADIAL_RULES = {
    "laplace": "Exact Laplace moments of k^3 e^(-eta k) (default)",
    "laguerre": "Generalized Gauss-Laguerre nodes on the pointwise integrands (cross-check)",
}

UNIT_SYSTEMS = {
    "natural": "hbar = c = 1, lengths in base units",
    "si": "metres, seconds, J/m^3 (Gaussian field convention)",
}

OUTPUT_FORMATS = {
    "csv": "One header line, 17 significant digits",
    "json": "Array of records",
}

