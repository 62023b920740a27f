#include "ultrazeta/errors.hpp"

namespace ultrazeta {

void throw_validation(const std::string& what) { throw ValidationError(what); }

}  // namespace ultrazeta
