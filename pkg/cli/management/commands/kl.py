from ..base import HeckeLabCommand


class Command(HeckeLabCommand):
    help = "Kazhdan-Lusztig polynomials h_{y,w} and their tilting counterparts."
    command_name = "kl"
