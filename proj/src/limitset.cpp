namespace mdc { }
