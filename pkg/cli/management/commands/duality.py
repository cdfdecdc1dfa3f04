from ..base import HeckeLabCommand


class Command(HeckeLabCommand):
    help = "Check that duality sends ch(IC) to ch(T) up to the sign (-1)^l(w)."
    command_name = "duality"

    def add_command_arguments(self, parser):
        parser.add_argument(
            "--block", type=int, help="Check the monodromic block of one geometric class."
        )
        parser.add_argument(
            "--conjectural",
            action="store_true",
            help="Allow tilting classes with non-trivial character.",
        )
