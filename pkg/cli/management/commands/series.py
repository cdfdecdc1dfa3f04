from ..base import HeckeLabCommand


class Command(HeckeLabCommand):
    help = "Geometric conjugacy classes of pairs (w, chi), with l-blocks when l is given."
    command_name = "series"

    def add_command_arguments(self, parser):
        parser.add_argument(
            "--modular",
            action="store_true",
            help="Keep only pairs whose character has order prime to l.",
        )
