from cloup import Context, HelpFormatter, HelpTheme

CONTEXT_SETTINGS = Context.settings(
    help_option_names=["-h", "--help"],
    terminal_width=100,
    align_option_groups=True,
    align_sections=True,
    show_default=True,
    formatter_settings=HelpFormatter.settings(
        theme=HelpTheme.light(),
        col2_min_width=40,
    ),
)
