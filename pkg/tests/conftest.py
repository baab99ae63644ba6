"""
Shared fixtures: the application built with the testing configuration and
a CLI runner bound to it
"""
import pytest
from app_factory import create_app


@pytest.fixture
def app(tmp_path):
    app = create_app('testing')
    app.config['RENDER_FOLDER'] = str(tmp_path / 'renders')
    yield app


@pytest.fixture
def runner(app):
    return app.test_cli_runner()
