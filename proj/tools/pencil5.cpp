// CLI entry point; subcommands are wired up in cli.hpp once the
// verification pipeline exists.
int main() { return 0; }
