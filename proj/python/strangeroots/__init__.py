"""Strange-root chains, Fagan's construction, and Tchoukaillon solitaire."""

from ._core import (
    AlistPair,
    AlistSequence,
    Board,
    FaganPair,
    FaganSequence,
    PlayTrace,
    PreimageInterval,
    RootRecord,
    TchoukBuilder,
    XSequence,
    alist,
    alist_step,
    alist_to_board,
    board_to_alist,
    cf,
    fagan_property,
    fagan_sequence,
    from_fagan,
    inverse_step,
    is_unique_root,
    move_vector,
    move_vector_from_board,
    play_move,
    preimage_count,
    preimage_interval,
    run_verify,
    scan_unique_roots,
    solve,
    strange_root,
    t,
    t_by_scan,
    tchouk,
    tchouk_recursive,
    to_fagan,
    w_sequence,
    x_sequence,
)

__version__ = "1.0.0"

__all__ = [
    "AlistPair",
    "AlistSequence",
    "Board",
    "FaganPair",
    "FaganSequence",
    "PlayTrace",
    "PreimageInterval",
    "RootRecord",
    "TchoukBuilder",
    "XSequence",
    "alist",
    "alist_step",
    "alist_to_board",
    "board_to_alist",
    "cf",
    "fagan_property",
    "fagan_sequence",
    "from_fagan",
    "inverse_step",
    "is_unique_root",
    "move_vector",
    "move_vector_from_board",
    "play_move",
    "preimage_count",
    "preimage_interval",
    "run_verify",
    "scan_unique_roots",
    "solve",
    "strange_root",
    "t",
    "t_by_scan",
    "tchouk",
    "tchouk_recursive",
    "to_fagan",
    "w_sequence",
    "x_sequence",
]
