namespace dring {
}
