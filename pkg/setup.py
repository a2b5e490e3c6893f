from setuptools import setup, find_packages

setup(
    name='repwords',
    version='0.1',
    packages=find_packages(),
    py_modules=['cli_app'],
    install_requires=[
        'pydantic>=2.5',
        'python-dotenv',
        'networkx>=3.1',
        'matplotlib>=3.7',
    ],
    entry_points={
        'console_scripts': ['repwords = cli_app:main'],
    },
)
