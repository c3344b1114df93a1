from argparse import ArgumentParser


class Service(object):
    """Mix-in giving a task access to a shared resource, such as the
    executor used to run replications.

    A service declares its command-line options in ``add_service_args``;
    they are shown under their own heading (``group_title``) in ``--help``.
    Tasks combine services by inheritance, before or after GammaTask.
    """

    group_title = None

    def add_args(self):
        # GammaTask and services call each other's add_args in either MRO order.
        super_add_args = getattr(super(Service, self), "add_args", lambda: None)
        super_add_args()

        parser = getattr(self, "parser", None) or ArgumentParser()
        if self.group_title:
            parser = parser.add_argument_group(self.group_title)
        self.add_service_args(parser)

    def add_service_args(self, parser):
        # Subclasses add their options here and call super().
        pass

    @property
    def _service_args(self):
        assert hasattr(self, "args"), "BUG: Service inheritor must provide 'args'"
        return self.args  # pylint: disable=no-member
