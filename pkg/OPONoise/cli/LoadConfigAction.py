import argparse

from .RunConfig import load_config


class LoadConfigAction(argparse.Action):
    """Action to load a `RunConfig` from a YAML file.
    Inherits from `argparse.Action`.
    """
    def __init__(self, option_strings, dest, **kwargs):
        super().__init__(option_strings, dest, **kwargs)

    def __call__(self, parser, namespace, values, option_string=None):
        """Overloaded function from `argparse.Action` which is called upon invocation.

        Args:
            parser (argparse.ArgumentParser): Argument parser with args.
            namespace: namespace object.
            values (str): Path to the config file.
            option_string (str, optional): Unused. Defaults to None.
        """
        setattr(namespace, self.dest, load_config(values))
        setattr(namespace, "config_path", values)
