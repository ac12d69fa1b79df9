default_ini = '''\
# This file will be copied to $HOME/.config/septimic on the first run.

[default]

# Directory where evaluated semitransvectants are cached between runs.
# Leave empty to use $SEPTIMIC_CACHE, or ./.cache when that is unset.
cache =

# Worker processes used to evaluate candidate semitransvectants.
jobs = 1

# Check that the x1-coefficients cancel in every semitransvectant. Set to
# "off" for faster runs once a recipe is known to be sound.
vanishing_check = on

# Random points used by the syzygy screen beyond the number of products.
screen_points = 32

# Seed for every random choice (evaluation points, primes, test matrices).
seed = 7
'''


def create_default_ini():
    """ Return the default ini.
    """
    return default_ini
