import argparse

MODE_LABELS = {"plus": "+", "minus": "-"}


class SelectModeAction(argparse.Action):
    """Action to translate a mode name into the label of a rotated mode."""
    def __init__(self, option_strings, dest, nargs=None, **kwargs):
        """ Interface has to be compatible with 'argparse.Action'. """
        super().__init__(option_strings, dest, **kwargs)

    def __call__(self, parser, namespace, values, option_string=None):
        """Function to be called on action invocation

        Args:
            parser (argparse.ArgumentParser): Passed implicitly.
            namespace ([type]): Passed implicitly.
            values (str): Mode name, 'plus' or 'minus'.
            option_string (str, optional): Unused. Defaults to None.
        """
        if values not in MODE_LABELS:
            parser.error(f"Mode must be one of {list(MODE_LABELS)}.")
        setattr(namespace, self.dest, MODE_LABELS[values])
