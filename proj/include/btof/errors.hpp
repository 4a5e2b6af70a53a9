#ifndef BTOF_ERRORS_HPP
#define BTOF_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace btof {

class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

#define BTOF_ERROR_TYPE(Name)                                          \
    class Name : public Error {                                        \
    public:                                                            \
        explicit Name(const std::string& msg) : Error(msg) {}          \
    }

BTOF_ERROR_TYPE(UnreadableFile);
BTOF_ERROR_TYPE(UnsupportedFormat);
BTOF_ERROR_TYPE(ImageTooSmall);
BTOF_ERROR_TYPE(TargetTooLarge);
BTOF_ERROR_TYPE(DimensionMismatch);
BTOF_ERROR_TYPE(BinCountMismatch);
BTOF_ERROR_TYPE(IndexMismatch);
BTOF_ERROR_TYPE(SingularSystem);
BTOF_ERROR_TYPE(EmptyBoundary);
BTOF_ERROR_TYPE(EmptyValidationSet);
BTOF_ERROR_TYPE(ClusterCountTooLarge);
BTOF_ERROR_TYPE(EmptyDataset);
BTOF_ERROR_TYPE(ConfigError);
BTOF_ERROR_TYPE(InvalidArgument);

#undef BTOF_ERROR_TYPE

} // namespace btof

#endif
