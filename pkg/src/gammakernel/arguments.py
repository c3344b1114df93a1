from argparse import Action, ArgumentError


class KeyValue(Action):
    """Argparse Action subclass for ``key=value`` lists.

    An argument such as ``--grid a=0.2,b=3,count=201`` is split on
    ``split_on`` (default ``,``) and each ``key=value`` pair is converted
    with the converter registered for that key in ``keys``. The result
    stored on the namespace is a dict.

    Keys not present in ``keys`` are rejected, as are missing keys listed
    in ``required``. If the option is given more than once, later pairs
    override earlier ones.

    Examples:
        >>> parser = ArgumentParser()
        >>> parser.add_argument(
        ...     "--schedule",
        ...     action=KeyValue,
        ...     keys={"c": float, "alpha": float},
        ...     required_keys=("alpha",),
        ... )
        >>> parser.parse_args(["--schedule", "c=1,alpha=0.45"])
        Namespace(schedule={'c': 1.0, 'alpha': 0.45})

    Attributes:
        split_on (str): the delimiter between pairs.
    """

    def __init__(self, *args, **kwargs):
        self.__split_on = kwargs.pop("split_on", ",")
        self.__keys = kwargs.pop("keys")
        self.__required = tuple(kwargs.pop("required_keys", ()))
        kwargs.setdefault("metavar", ",".join("%s=..." % k for k in self.__keys))
        super(KeyValue, self).__init__(*args, **kwargs)

    def __call__(self, _, namespace, values, options=None):
        items = dict(getattr(namespace, self.dest, None) or {})

        for pair in values.split(self.split_on):
            if not pair.strip():
                continue
            key, sep, raw = pair.partition("=")
            key = key.strip()
            if not sep:
                raise ArgumentError(self, "expected key=value, got %r" % pair)
            if key not in self.__keys:
                raise ArgumentError(
                    self,
                    "unknown key %r (expected: %s)" % (key, ", ".join(self.__keys)),
                )
            try:
                items[key] = self.__keys[key](raw.strip())
            except ValueError:
                raise ArgumentError(self, "invalid value for %s: %r" % (key, raw))

        missing = [k for k in self.__required if k not in items]
        if missing:
            raise ArgumentError(self, "missing key(s): %s" % ", ".join(missing))

        setattr(namespace, self.dest, items)

    @property
    def split_on(self):
        return self.__split_on
