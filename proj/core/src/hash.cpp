#include "pvdb/hash.hpp"

#include <openssl/evp.h>

#include <stdexcept>

#include "pvdb/hex.hpp"

namespace pvdb {

namespace {

template <std::size_t N>
std::array<std::uint8_t, N> digest_with(const EVP_MD* md, std::string_view bytes) {
  std::array<std::uint8_t, N> out{};
  unsigned int len = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), out.data(), &len, md, nullptr) != 1 ||
      len != N) {
    throw std::runtime_error("message digest failed");
  }
  return out;
}

}  // namespace

Sha1Digest sha1(std::string_view bytes) { return digest_with<20>(EVP_sha1(), bytes); }

Sha256Digest sha256(std::string_view bytes) {
  return digest_with<32>(EVP_sha256(), bytes);
}

std::string sha256_hex(std::string_view bytes) {
  const Sha256Digest d = sha256(bytes);
  return to_hex(d.data(), d.size());
}

}  // namespace pvdb
