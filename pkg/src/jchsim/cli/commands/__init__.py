"""CLI commands for jchsim."""
