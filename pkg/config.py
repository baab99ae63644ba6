"""
Configuration settings for the plane partition engine
"""
import os


def _env_int(name, default):
    """Integer setting from the environment, or the default"""
    value = os.environ.get(name)
    return int(value) if value else default


class Config:
    """Base configuration class"""
    # Enumeration budgets
    ORACLE_MAX_CELLS = _env_int('PLANEPART_ORACLE_BUDGET', 64)  # largest a*b*c for brute force
    MATCHING_MAX_VERTICES = _env_int('PLANEPART_MATCHING_BUDGET', 120)
    TERM_CHECK_MAX_VERTICES = 40  # per colour class

    # Rendering settings
    RENDER_FOLDER = 'renders'
    SVG_UNIT = 40  # pixels per triangle side

    @staticmethod
    def init_app(app):
        """Initialize application with config"""
        # Ensure render directory exists
        os.makedirs(app.config['RENDER_FOLDER'], exist_ok=True)


class DevelopmentConfig(Config):
    """Development configuration"""
    DEBUG = True


class ProductionConfig(Config):
    """Production configuration"""
    DEBUG = False


class TestingConfig(Config):
    """Testing configuration"""
    TESTING = True
    DEBUG = True
    RENDER_FOLDER = 'test_renders'


# Configuration mapping
config = {
    'development': DevelopmentConfig,
    'production': ProductionConfig,
    'testing': TestingConfig,
    'default': DevelopmentConfig
}
