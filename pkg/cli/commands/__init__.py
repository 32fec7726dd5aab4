"""Um módulo por subcomando: HELP, configure(parser) e build(args, limits)."""
