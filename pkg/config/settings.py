from pydantic import Field
from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    # App
    app_name: str = "lorentzian-lattice-verifier"
    # Vertex catalog cache
    cache_dir: str = ".cache/vertex_catalogs"
    use_cache: bool = True
    # Enumeration
    threads: int = Field(default=1, ge=1)
    # Reports
    report_format: str = "json"
    # Property suites
    soak_cases: int = Field(default=10_000, ge=1)
    # Logging
    log_level: str = "INFO"
    log_dir: str = "logs"

    model_config = SettingsConfigDict(
        env_file=".env",
        env_prefix="LORENTZ_",
        extra="ignore",
    )


settings = Settings()
