"""
Main entry point for the plane partition engine
Run commands as `python app.py count pp 2 2 2`
"""
from flask.cli import FlaskGroup
from app_factory import create_app

# Command group bound to the application factory
cli = FlaskGroup(create_app=create_app)

if __name__ == '__main__':
    cli()
