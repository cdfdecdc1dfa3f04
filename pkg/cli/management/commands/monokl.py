from ..base import HeckeLabCommand


class Command(HeckeLabCommand):
    help = "Monodromic Kazhdan-Lusztig polynomials, block by block."
    command_name = "monokl"

    def add_command_arguments(self, parser):
        parser.add_argument("--block", type=int, help="Position of one geometric class.")
