#ifndef TCLIQUE_ERRORS_HH
#define TCLIQUE_ERRORS_HH

#include <stdexcept>
#include <string>

namespace tclique
{
    /// Input violates a structural invariant (loop, digon, missing arc, bad permutation...).
    class InvalidInput : public std::invalid_argument
    {
    public:
        using std::invalid_argument::invalid_argument;
    };

    /// A search exhausted its node budget before reaching a definite answer.
    class BudgetExceeded : public std::runtime_error
    {
    public:
        using std::runtime_error::runtime_error;
    };

    /// The instance is larger than an exact routine supports.
    class SizeLimitExceeded : public std::runtime_error
    {
    public:
        using std::runtime_error::runtime_error;
    };
}

#endif
