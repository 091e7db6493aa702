#pragma once

#include <stdexcept>
#include <string>

namespace mbound {

// Base class for everything thrown by this library.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Errors in the data itself: zero denominators, missing snapshot entries,
// violated count invariants. The CLI maps these to exit code 1.
struct computation_error : error {
    using error::error;
};

struct zero_count_error : computation_error {
    using computation_error::computation_error;
};

struct missing_entry_error : computation_error {
    using computation_error::computation_error;
};

struct count_domain_error : computation_error {
    using computation_error::computation_error;
};

// Environment/input errors: unreadable files, corrupt or mismatched
// formats, invalid encodings. The CLI maps these to exit code 2.
struct io_error : error {
    using error::error;
};

struct format_error : io_error {
    using io_error::io_error;
};

struct version_error : format_error {
    using format_error::format_error;
};

struct encoding_error : io_error {
    using io_error::io_error;
};

}  // namespace mbound
