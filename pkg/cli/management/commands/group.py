from ..base import HeckeLabCommand


class Command(HeckeLabCommand):
    help = "Enumerate the Weyl group: elements, Bruhat order and conjugacy classes."
    command_name = "group"

    def add_command_arguments(self, parser):
        parser.add_argument(
            "--twisted", action="store_true", help="Use tau-twisted conjugacy classes."
        )
        parser.add_argument(
            "--characters", action="store_true", help="Include the character table."
        )
