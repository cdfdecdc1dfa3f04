from ..base import HeckeLabCommand


class Command(HeckeLabCommand):
    help = "Weight-class certificates for unipotent projective characters."
    command_name = "dudasmalle"
