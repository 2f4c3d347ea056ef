from dotenv import load_dotenv
import os


def load_config():
    """Load all environment variables"""
    load_dotenv()
    return {
        'numeric': load_numeric_config(),
        'search': load_search_config(),
        'frame': load_frame_config(),
        'database_url': get_database_url(),
    }


def _flag(name: str, default: str) -> bool:
    return os.getenv(name, default).strip().lower() in ('1', 'true', 'yes', 'on')


def load_numeric_config():
    """Load finite-difference and sampling settings"""
    return {
        'step': float(os.getenv('SIGSURF_STEP', '1e-3')),
        'tolerance': float(os.getenv('SIGSURF_TOL', '1e-5')),
        'seed': int(os.getenv('SIGSURF_SEED', '0')),
        'richardson': _flag('SIGSURF_RICHARDSON', '1'),
    }


def load_search_config():
    """Load the worker cap for partitioned enumeration"""
    threads = os.getenv('SIGSURF_THREADS')
    return {
        'threads': max(1, int(threads)) if threads else (os.cpu_count() or 1),
    }


def load_frame_config():
    """Load tolerances for the non-Veronese frame checks"""
    return {
        'ratio_tolerance': float(os.getenv('SIGSURF_FRAME_TOL', '1e-6')),
        'curvature_tolerance': float(os.getenv('SIGSURF_FRAME_CURVATURE_TOL', '1e-4')),
        'samples': int(os.getenv('SIGSURF_FRAME_SAMPLES', '25')),
    }


def get_database_url():
    """Get catalog database URL from config"""
    return os.getenv('SIGSURF_DATABASE_URL', 'sqlite:///sigsurf_catalog.db')
