#ifndef RLC_CLI_HPP
#define RLC_CLI_HPP

namespace rlc {

// Entry point of the command-line tool; exposed as a library function so the
// test suite can drive it in-process. Exit status: 0 success, 1 when
// --assert is given and the checked property is violated, 2 on usage or
// input errors.
int cli_main(int argc, const char* const* argv);

} // namespace rlc

#endif
