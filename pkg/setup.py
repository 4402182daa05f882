from setuptools import find_packages, setup


def fetch_requirements(path):
    with open(path, 'r') as fd:
        return [r.strip() for r in fd.readlines() if r.strip()]


def fetch_readme():
    with open('README.md', encoding='utf-8') as f:
        return f.read()


def get_version():
    with open('version.txt') as f:
        return f.read().strip()


setup(
    name='spunnormal',
    version=get_version(),
    packages=find_packages(exclude=(
        'tests',
        'docs',
        'examples',
        'requirements',
        '*.egg-info',
    )),
    package_data={'spunnormal.fixtures': ['*.json']},
    description='Exact spun-normal surfaces, semi-angle certificates and tropical pre-varieties of ideal triangulations',
    long_description=fetch_readme(),
    long_description_content_type='text/markdown',
    license='Apache Software License 2.0',
    install_requires=fetch_requirements('requirements/requirements.txt'),
    extras_require={
        'test': fetch_requirements('requirements/requirements-test.txt'),
    },
    entry_points={
        'console_scripts': ['spunnormal = spunnormal.cli:main'],
    },
    python_requires='>=3.8',
    classifiers=[
        'Programming Language :: Python :: 3',
        'License :: OSI Approved :: Apache Software License',
        'Topic :: Scientific/Engineering :: Mathematics',
    ],
)
