from ..base import HeckeLabCommand


class Command(HeckeLabCommand):
    help = "Compare the trace of KL elements at v=1 with the dual of KL values."
    command_name = "trcheck"
