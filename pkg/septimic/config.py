""" Configuration related functions.
"""

import configparser
import os
from pathlib import Path

from septimic.configs.default import create_default_ini
from septimic.util.cache import default_cache_dir


user_confdir = '{}/.config/septimic'.format(Path.home())
user_conf = '{}/septimic.ini'.format(user_confdir)


def get_defaults():
    """ Default values for items that should be in a config file.

    These values will be overruled by existing config entries. Useful in
    the event a config file is missing an entry.

    Returns:
        A dictionary that contains all expected entries for a
        septimic configuration file.
    """
    return {
        'cache': '',
        'jobs': '1',
        'vanishing_check': 'on',
        'screen_points': '32',
        'seed': '7',
    }


def do_first_time_setup():
    """ Copy default.ini to the user conf path.
    """
    try:
        os.makedirs(user_confdir)
    except FileExistsError:
        pass

    # Write user-specific ini with comments.
    with open(user_conf, 'w') as f:
        f.write(create_default_ini())


def add_config_args(args, config=None):
    """ Add params from a config file to an ArgumentParser.

    Parameters are only copied if not already set in the
    ArgumentParser.

    Args:
        args: ArgumentParser instance.
        config: Path to config file.

    Returns:
        args with config parameters filled in where the command line left
        them unset.

    Raises:
        FileNotFoundError: Provided config file doesn't exist.
        KeyError: Configuration file has no default section (or no sections).
    """
    config = user_conf if not config else config

    if not os.path.exists(config):
        raise FileNotFoundError('Config {} does not exist.'.format(config))

    cp = configparser.ConfigParser()

    try:
        cp.read(config)
    except Exception as e:
        raise KeyError('Config "{}" is invalid. {}.'.format(config, e))

    if 'default' not in cp:
        raise KeyError('Config {} has no "default" section.'.format(config))

    d = get_defaults()
    d.update(cp['default'])

    # copy vals into args if not already in args.
    for key, val in d.items():
        if getattr(args, key, None) is None:
            setattr(args, key, val)

    return args


def normalize_config_args(args):
    """ Convert config strings in args to typed values.

    Raises:
        ValueError: A value is out of range or of the wrong type.
    """
    try:
        args.jobs = int(args.jobs)
        args.screen_points = int(args.screen_points)
        args.seed = int(args.seed)
    except (TypeError, ValueError):
        raise ValueError('jobs, screen_points and seed must be integers.')

    if args.jobs < 1:
        raise ValueError('jobs must be a positive integer.')
    if args.screen_points < 1:
        raise ValueError('screen_points must be at least 1.')

    check = args.vanishing_check
    if isinstance(check, str):
        if check.lower() not in ('on', 'off'):
            raise ValueError('vanishing_check must be "on" or "off".')
        check = check.lower() == 'on'
    args.vanishing_check = check

    if not args.cache:
        args.cache = default_cache_dir()
    return args
