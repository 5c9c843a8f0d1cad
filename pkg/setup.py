from setuptools import setup, find_packages

DESCRIPTION = """
Rankdescent builds approximate K-nearest neighbor graphs from triplet
comparisons, using K-NN descent with a statistical stopping rule.
""".strip()

setup(
    name = "rankdescent",
    version = "0.1",
    packages = find_packages(),
    install_requires = ['pyyaml>=5.1', 'numpy>=1.17', 'scipy>=1.4'],
    python_requires = '>=3.7',
    description = DESCRIPTION,
    keywords = ['nearest neighbors', 'knn graph', 'nn-descent',
            'triplet comparison', 'ranking system'],
    entry_points = {
        'console_scripts': ['rankdescent=rankdescent.commands.main:main'],
    },
)
