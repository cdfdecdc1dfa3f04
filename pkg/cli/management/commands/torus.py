from ..base import HeckeLabCommand


class Command(HeckeLabCommand):
    help = "Invariant factors and characters of each fixed-point torus T^{wF}."
    command_name = "torus"
