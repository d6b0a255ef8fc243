// translation unit anchor for the core library
